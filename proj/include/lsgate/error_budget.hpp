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

#ifndef LSGATE_ERROR_BUDGET_HPP
#define LSGATE_ERROR_BUDGET_HPP

#include <string>
#include <utility>

#include "lsgate/gate_design.hpp"

namespace lsgate {

struct ThermalState {
  ModeTable nbar{};

  static ThermalState uniform(double n);
  /// <n_a n_b> for two modes of a thermal product state.
  double second_moment(int a1, int m1, int a2, int m2) const;
  void validate() const;
};

struct HeatingRates {
  double axial = 3.9;    // phonons added to z modes per gate
  double radial = 0.255; // phonons added to x and y modes per gate
};

/// How the microscopic infidelity is mapped onto a channel rate.
///  Nominal: p = 5/8 eps (default)
///  Exact: p = 5/4 eps, which makes 1 - F_g of either Pauli channel equal eps
enum class RateConvention { Nominal, Exact };
double rate_factor(RateConvention c);

struct ErrorBudget {
  double eps_th_act = 0;
  double eps_th_spec = 0;
  double eps_off_act = 0;
  double eps_off_spec = 0;
  double eps_deph = 0;
  double eps_scatt_rayleigh = 0;
  double eps_scatt_raman = 0;
  double eps_total = 0;

  static std::string csv_header();
  /// t_g [us], nbar, the seven terms, total, channel rate.
  std::string csv_row(double tg_us, double nbar, RateConvention c = RateConvention::Nominal) const;
};

std::pair<double, double> thermal_error(const TrapLaserConfig& cfg, const GateGeometry& g, const ThermalState& th);

/// `rabi` is the amplitude entering both off-resonant terms.
std::pair<double, double> offresonant_error(const TrapLaserConfig& cfg, const GateGeometry& g,
                                            const ThermalState& th, double rabi);

double dephasing_error(double t_g, double t2, bool correlated);

/// (Rayleigh, Raman) for two ions driven by two beams of equal Rabi frequency.
std::pair<double, double> scattering_error(const TrapLaserConfig& cfg, double t_g);

/// Rabi amplitude used by the off-resonant terms under cfg.offres_rabi.
double offresonant_rabi(const TrapLaserConfig& cfg, const GateGeometry& g);

ErrorBudget total_error(const TrapLaserConfig& cfg, const GateGeometry& g, const ThermalState& th);

ThermalState heating_step(const ThermalState& th, const HeatingRates& rates = {});

/// p = factor * eps. Throws if p exceeds `cap` (15/16 depolarizing, 3/4 dephasing).
double channel_rate(double eps_total, double cap = 15.0 / 16.0, RateConvention c = RateConvention::Nominal);

}  // namespace lsgate

#endif
