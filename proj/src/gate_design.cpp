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

#include "lsgate/gate_design.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace lsgate {

TrapLaserConfig TrapLaserConfig::defaults() {
  TrapLaserConfig c;
  const double mhz = kTwoPi * 1e6;
  c.omega = {{{4.64 * mhz, 4.37 * mhz}, {3.88 * mhz, 3.57 * mhz}, {1.49 * mhz, 2.57 * mhz}}};
  c.delta_k = 2.0 * kTwoPi / 397e-9;
  c.misalign_theta = 0.5;
  c.misalign_chi = std::numbers::pi / 4;
  c.ion_mass = 39.962591 * kAmu;
  c.omega_l = 0.1 * c.omega[AX_X][MODE_COM];
  c.detuning = kTwoPi * 100e9;
  c.linewidth = kTwoPi * 22e6;
  c.t2 = 2.1;
  return c;
}

std::array<double, 3> TrapLaserConfig::direction() const {
  double s = std::sin(misalign_theta);
  return {std::cos(misalign_theta), s * std::cos(misalign_chi), s * std::sin(misalign_chi)};
}

double TrapLaserConfig::displacement(int ion, Mode m) {
  const double h = std::sqrt(0.5);
  if (ion != 0 && ion != 1) throw std::out_of_range("two-ion crystal: ion index must be 0 or 1");
  return (m == MODE_ZZ && ion == 1) ? -h : h;
}

void TrapLaserConfig::validate() const {
  for (const auto& ax : omega)
    for (double w : ax)
      if (!(w > 0)) throw std::invalid_argument("mode frequencies must be strictly positive");
  if (!(t2 > 0)) throw std::invalid_argument("T2 must be positive");
  if (!(ion_mass > 0)) throw std::invalid_argument("ion mass must be positive");
  if (delta_k < 0 || omega_l < 0 || linewidth < 0) throw std::invalid_argument("negative laser parameter");
  if (!(geometry_min_fraction > 0 && geometry_min_fraction <= 1))
    throw std::invalid_argument("geometry_min_fraction must lie in (0, 1]");
  if (ladder_max_denominator < 2) throw std::invalid_argument("ladder_max_denominator must be >= 2");
}

ModeTable lamb_dicke(const TrapLaserConfig& cfg) {
  auto e = cfg.direction();
  ModeTable eta{};
  for (int a = 0; a < 3; ++a)
    for (int m = 0; m < 2; ++m) {
      double w = cfg.omega[a][m];
      if (!(w > 0)) throw std::invalid_argument("zero or negative mode frequency");
      eta[a][m] = cfg.delta_k * std::abs(e[a]) * std::sqrt(kHbar / (2.0 * cfg.ion_mass * w));
    }
  return eta;
}

GateGeometry geometry_for(double t_g, const TrapLaserConfig& cfg, int k, int r) {
  if (!(t_g > 0)) throw std::invalid_argument("gate time must be positive");
  if (k < 1 || r < 1) throw std::invalid_argument("ladder rung and loop count must be >= 1");
  GateGeometry g;
  g.t_g = t_g;
  g.r = r;
  g.p = -k;
  g.f1 = static_cast<double>(k) / (k + 1);
  g.f2 = 1.0 / (k + 1);
  double split = kTwoPi * r * (k + 1) / t_g;
  g.omega_x_com = cfg.omega[AX_X][MODE_COM];
  g.omega_x_zz = g.omega_x_com - split;
  if (!(g.omega_x_zz > 0)) throw std::invalid_argument("gate time too short for this rung");
  g.beatnote = g.f1 * g.omega_x_com + g.f2 * g.omega_x_zz;
  g.delta_com = g.f2 * split;
  g.delta_zz = -g.f1 * split;
  return g;
}

GateGeometry select_geometry(double t_g, const TrapLaserConfig& cfg) {
  if (!(t_g > 0)) throw std::invalid_argument("gate time must be positive");
  double nominal = cfg.omega[AX_X][MODE_COM] - cfg.omega[AX_X][MODE_ZZ];
  for (int k = 1; k < cfg.ladder_max_denominator; ++k) {
    double split = kTwoPi * (k + 1) / t_g;
    if (split > nominal * (1 + 1e-12)) break;
    if (split >= cfg.geometry_min_fraction * nominal) return geometry_for(t_g, cfg, k, 1);
  }
  std::ostringstream os;
  os << "no admissible phase-loop geometry for t_g = " << t_g * 1e6 << " us";
  throw std::runtime_error(os.str());
}

TrapLaserConfig apply_geometry(const TrapLaserConfig& cfg, const GateGeometry& g) {
  TrapLaserConfig c = cfg;
  c.omega[AX_X][MODE_COM] = g.omega_x_com;
  c.omega[AX_X][MODE_ZZ] = g.omega_x_zz;
  return c;
}

namespace {

// Sum over modes of eta^2 M_1 M_2 / delta, scaled so J = -(rabi^2/2) DW * S.
double mode_sum(const TrapLaserConfig& cfg, const GateGeometry& g, double* dw) {
  if (g.delta_com == 0.0 || g.delta_zz == 0.0) throw std::domain_error("resonant detuning (delta = 0)");
  ModeTable eta = lamb_dicke(apply_geometry(cfg, g));
  double ec = eta[AX_X][MODE_COM], ez = eta[AX_X][MODE_ZZ];
  *dw = std::exp(-(ec * ec + ez * ez) / 2);
  double mc = TrapLaserConfig::displacement(0, MODE_COM) * TrapLaserConfig::displacement(1, MODE_COM);
  double mz = TrapLaserConfig::displacement(0, MODE_ZZ) * TrapLaserConfig::displacement(1, MODE_ZZ);
  return ec * ec * mc / g.delta_com + ez * ez * mz / g.delta_zz;
}

}  // namespace

double coupling_strength(const TrapLaserConfig& cfg, const GateGeometry& g, double rabi) {
  double dw = 0;
  double s = mode_sum(cfg, g, &dw);
  return -0.5 * rabi * rabi * dw * s;
}

double required_rabi(const TrapLaserConfig& cfg, const GateGeometry& g) {
  double dw = 0;
  double s = mode_sum(cfg, g, &dw);
  if (s == 0.0) throw std::domain_error("no x-axis coupling: required Rabi amplitude is unbounded");
  double rabi = std::sqrt(std::numbers::pi / (2.0 * g.t_g * dw * std::abs(s)));
  if (cfg.rabi_cap > 0 && rabi > cfg.rabi_cap) {
    std::ostringstream os;
    os << "required Rabi amplitude " << rabi << " rad/s exceeds cap " << cfg.rabi_cap << " rad/s";
    throw std::runtime_error(os.str());
  }
  return rabi;
}

std::complex<double> phase_trajectory(double t, Mode m, int ion, const TrapLaserConfig& cfg,
                                      const GateGeometry& g, double rabi) {
  if (t < 0 || t > g.t_g * (1 + 1e-12)) throw std::out_of_range("time outside [0, t_g]");
  double delta = m == MODE_COM ? g.delta_com : g.delta_zz;
  if (delta == 0.0) throw std::domain_error("resonant detuning (delta = 0)");
  ModeTable eta = lamb_dicke(apply_geometry(cfg, g));
  double f = 0.5 * rabi * eta[AX_X][m] * TrapLaserConfig::displacement(ion, m);
  std::complex<double> e = std::polar(1.0, delta * t);
  return (f / delta) * (1.0 - e);
}

}  // namespace lsgate
