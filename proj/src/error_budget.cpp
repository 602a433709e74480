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

#include "lsgate/error_budget.hpp"

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace lsgate {

namespace {

constexpr double kPi = std::numbers::pi;

double coupling_coefficient(int a1, int a2) {
  if (a1 == a2) return 0.0;
  if (a1 == AX_X || a2 == AX_X) return 0.5;
  return 0.25;
}

}  // namespace

ThermalState ThermalState::uniform(double n) {
  ThermalState th;
  for (auto& ax : th.nbar) ax = {n, n};
  th.validate();
  return th;
}

double ThermalState::second_moment(int a1, int m1, int a2, int m2) const {
  double n1 = nbar[a1][m1], n2 = nbar[a2][m2];
  if (a1 == a2 && m1 == m2) return 2 * n1 * n1 + n1;
  return n1 * n2;
}

void ThermalState::validate() const {
  for (const auto& ax : nbar)
    for (double n : ax)
      if (!(n >= 0)) throw std::invalid_argument("mean phonon numbers must be >= 0");
}

std::string ErrorBudget::csv_header() {
  return "tg_us,nbar,eps_th_act,eps_th_spec,eps_off_act,eps_off_spec,eps_deph,eps_rayleigh,eps_raman,eps_total,p";
}

std::string ErrorBudget::csv_row(double tg_us, double nbar, RateConvention c) const {
  std::string out;
  char buf[64];
  for (double v : {tg_us, nbar, eps_th_act, eps_th_spec, eps_off_act, eps_off_spec, eps_deph, eps_scatt_rayleigh,
                   eps_scatt_raman, eps_total, rate_factor(c) * eps_total}) {
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    if (!out.empty()) out += ',';
    out.append(buf, r.ptr);
  }
  return out;
}

std::pair<double, double> thermal_error(const TrapLaserConfig& cfg, const GateGeometry& g, const ThermalState& th) {
  th.validate();
  ModeTable eta = lamb_dicke(apply_geometry(cfg, g));
  double act = 0, spec = 0;
  for (int m1 = 0; m1 < 2; ++m1)
    for (int m2 = 0; m2 < 2; ++m2) {
      act += std::pow(eta[AX_X][m1], 2) * std::pow(eta[AX_X][m2], 2) * th.second_moment(AX_X, m1, AX_X, m2);
      for (int a1 = 0; a1 < 3; ++a1)
        for (int a2 = 0; a2 < 3; ++a2) {
          double c = coupling_coefficient(a1, a2);
          if (c == 0) continue;
          spec += c * std::pow(eta[a1][m1], 2) * std::pow(eta[a2][m2], 2) * th.second_moment(a1, m1, a2, m2);
        }
    }
  const double pref = kPi * kPi / 20;
  return {pref * act, pref * spec};
}

std::pair<double, double> offresonant_error(const TrapLaserConfig& cfg, const GateGeometry& g,
                                            const ThermalState& th, double rabi) {
  th.validate();
  TrapLaserConfig c = apply_geometry(cfg, g);
  ModeTable eta = lamb_dicke(c);
  const double wl = g.beatnote;
  for (const auto& ax : c.omega)
    for (double w : ax)
      if (std::abs(w - wl) < 1e-9 * w) throw std::domain_error("beatnote resonant with a mode frequency");
  double act = 0;
  // Two ions, identical contributions.
  for (int m = 0; m < 2; ++m) {
    double w = c.omega[AX_X][m];
    act += 2.0 * rabi * rabi / 5.0 * eta[AX_X][m] * eta[AX_X][m] * kTwoPi / std::abs(w * w - wl * wl);
  }
  double spec = 0;
  for (int a : {AX_Y, AX_Z})
    for (int m = 0; m < 2; ++m) {
      double w = c.omega[a][m];
      double e2 = eta[a][m] * eta[a][m];
      double den = wl * wl - w * w;
      std::complex<double> br((wl * wl + w * w) / den * (2 * th.nbar[a][m] + 1), kTwoPi * w / (w - wl));
      spec += 0.8 * std::pow(rabi * e2, 2) / std::abs(den) * std::abs(br);
    }
  return {act, spec};
}

double dephasing_error(double t_g, double t2, bool correlated) {
  if (t_g < 0 || !(t2 > 0)) throw std::invalid_argument("dephasing needs t_g >= 0 and T2 > 0");
  double pd = -0.5 * std::expm1(-t_g / t2);
  if (!correlated) return 0.8 * (2 * pd - pd * pd);
  return 0.8 * (2 * pd - 3 * pd * pd + 4 * std::pow(pd, 3) - 2 * std::pow(pd, 4));
}

std::pair<double, double> scattering_error(const TrapLaserConfig& cfg, double t_g) {
  if (cfg.detuning == 0.0) throw std::domain_error("dipole detuning must be nonzero");
  double ratio = cfg.linewidth / std::abs(cfg.detuning);
  if (ratio > 1e-2) std::fprintf(stderr, "warning: Gamma/Delta = %g is not small\n", ratio);
  const int n_ions = 2;
  double o2 = cfg.omega_l * cfg.omega_l;
  double d = std::abs(cfg.detuning);
  // Two beams, each with equal up/down Rabi frequencies.
  double gamma_rai = ratio * (2 * (o2 + o2) / (4 * d));
  double gamma_ram = ratio * (2 * o2 / d);
  double rayleigh = 0.8 * n_ions * t_g * gamma_rai / 2;
  double raman = 1.2 * n_ions * t_g * (2 * gamma_ram);
  return {rayleigh, raman};
}

double offresonant_rabi(const TrapLaserConfig& cfg, const GateGeometry& g) {
  return cfg.offres_rabi == OffResonantRabi::Fixed ? cfg.omega_l : required_rabi(cfg, g);
}

ErrorBudget total_error(const TrapLaserConfig& cfg, const GateGeometry& g, const ThermalState& th) {
  ErrorBudget b;
  std::tie(b.eps_th_act, b.eps_th_spec) = thermal_error(cfg, g, th);
  std::tie(b.eps_off_act, b.eps_off_spec) = offresonant_error(cfg, g, th, offresonant_rabi(cfg, g));
  b.eps_deph = dephasing_error(g.t_g, cfg.t2, cfg.correlated_dephasing);
  std::tie(b.eps_scatt_rayleigh, b.eps_scatt_raman) = scattering_error(cfg, g.t_g);
  b.eps_total = b.eps_th_act + b.eps_th_spec + b.eps_off_act + b.eps_off_spec + b.eps_deph + b.eps_scatt_rayleigh +
                b.eps_scatt_raman;
  return b;
}

ThermalState heating_step(const ThermalState& th, const HeatingRates& rates) {
  ThermalState out = th;
  for (int m = 0; m < 2; ++m) {
    out.nbar[AX_X][m] += rates.radial;
    out.nbar[AX_Y][m] += rates.radial;
    out.nbar[AX_Z][m] += rates.axial;
  }
  return out;
}

double rate_factor(RateConvention c) { return c == RateConvention::Nominal ? 0.625 : 1.25; }

double channel_rate(double eps_total, double cap, RateConvention c) {
  if (eps_total < 0) throw std::invalid_argument("negative infidelity");
  double p = rate_factor(c) * eps_total;
  if (p > cap) {
    std::ostringstream os;
    os << "channel rate p = " << p << " exceeds the channel cap " << cap;
    throw std::domain_error(os.str());
  }
  return p;
}

}  // namespace lsgate
