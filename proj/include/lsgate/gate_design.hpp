// Copyright 2026 The lsgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LSGATE_GATE_DESIGN_HPP
#define LSGATE_GATE_DESIGN_HPP

#include <array>
#include <complex>
#include <map>
#include <string>

namespace lsgate {

enum Axis { AX_X = 0, AX_Y = 1, AX_Z = 2 };
enum Mode { MODE_COM = 0, MODE_ZZ = 1 };

constexpr double kHbar = 1.054571817e-34;
constexpr double kAmu = 1.66053906660e-27;
constexpr double kTwoPi = 6.283185307179586;

using ModeTable = std::array<std::array<double, 2>, 3>;  // [axis][mode]

/// Which Rabi amplitude enters the off-resonant error terms.
enum class OffResonantRabi { Fixed, Solved };

struct TrapLaserConfig {
  ModeTable omega{};                 // rad/s
  double delta_k = 0.0;              // |Delta k|, 1/m
  double misalign_theta = 0.5;       // polar tilt of Delta k off x, rad
  double misalign_chi = 0.0;         // azimuth in the y-z plane, rad
  double ion_mass = 0.0;             // kg
  double omega_l = 0.0;              // dipole Rabi frequency, rad/s
  double detuning = 0.0;             // Delta, rad/s
  double linewidth = 0.0;            // Gamma, rad/s
  double t2 = 0.0;                   // s
  double geometry_min_fraction = 0.5;
  int ladder_max_denominator = 20;
  OffResonantRabi offres_rabi = OffResonantRabi::Fixed;
  double rabi_cap = 0.0;             // rad/s, 0 disables the check
  bool correlated_dephasing = false;

  /// Default 40Ca+ two-ion parameter set.
  static TrapLaserConfig defaults();

  /// Unit vector of Delta k in (x, y, z).
  std::array<double, 3> direction() const;
  /// Normal-mode displacement M_{ion,mode} for two ions (same for every axis).
  static double displacement(int ion, Mode m);

  void validate() const;
};

struct GateGeometry {
  double t_g = 0.0;
  double beatnote = 0.0;       // Delta omega_L, rad/s
  double delta_com = 0.0;      // omega_{x,com} - Delta omega_L
  double delta_zz = 0.0;       // omega_{x,zz} - Delta omega_L
  int r = 1;
  int p = -1;
  double f1 = 0.5;
  double f2 = 0.5;
  double omega_x_com = 0.0;    // radial frequencies the geometry was solved for
  double omega_x_zz = 0.0;
};

/// eta_{axis,mode} = |dk| e_axis sqrt(hbar / (2 m omega)).
ModeTable lamb_dicke(const TrapLaserConfig& cfg);

/// Beatnote at fractions (k/(k+1), 1/(k+1)) with r loops of the com mode.
/// The zz radial frequency is retuned so that both closure conditions hold
/// exactly at t_g.
GateGeometry geometry_for(double t_g, const TrapLaserConfig& cfg, int k, int r = 1);

/// Smallest-loop ladder rung whose required com/zz splitting lies within
/// [min_fraction, 1] of the configured splitting.
GateGeometry select_geometry(double t_g, const TrapLaserConfig& cfg);

/// Copy of cfg with the radial frequencies replaced by the geometry's.
TrapLaserConfig apply_geometry(const TrapLaserConfig& cfg, const GateGeometry& g);

/// Two-mode x-axis coupling for vacuum phonons, rad/s.
double coupling_strength(const TrapLaserConfig& cfg, const GateGeometry& g, double rabi);

/// Positive Rabi amplitude with |J| t_g = pi/4.
double required_rabi(const TrapLaserConfig& cfg, const GateGeometry& g);

/// Closed-form displacement of ion `ion` in x mode `m` at time t (equilibrium phase 0).
std::complex<double> phase_trajectory(double t, Mode m, int ion, const TrapLaserConfig& cfg,
                                      const GateGeometry& g, double rabi);

}  // namespace lsgate

#endif
