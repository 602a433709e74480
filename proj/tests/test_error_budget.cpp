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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lsgate/channels.hpp"
#include "lsgate/config.hpp"
#include "lsgate/error_budget.hpp"
#include "lsgate/sweep.hpp"

namespace lsgate {
namespace {

struct Fixture : ::testing::Test {
  TrapLaserConfig cfg = TrapLaserConfig::defaults();
  GateGeometry g = select_geometry(30e-6, cfg);
};

TEST_F(Fixture, ThermalVanishesAtGroundStateAndGrows) {
  auto [a0, s0] = thermal_error(cfg, g, ThermalState::uniform(0));
  EXPECT_EQ(a0, 0.0);
  EXPECT_EQ(s0, 0.0);
  double prev = 0;
  for (double n : {0.01, 0.1, 1.0, 10.0}) {
    auto [a, s] = thermal_error(cfg, g, ThermalState::uniform(n));
    EXPECT_GT(a + s, prev);
    prev = a + s;
  }
}

TEST_F(Fixture, ThermalActiveMatchesClosedForm) {
  double n = 0.7;
  ModeTable eta = lamb_dicke(apply_geometry(cfg, g));
  double e1 = eta[AX_X][0] * eta[AX_X][0], e2 = eta[AX_X][1] * eta[AX_X][1];
  // sum_{m,m'} eta_m^2 eta_m'^2 <n_m n_m'>, thermal: <n^2> = 2n^2 + n.
  double s = e1 * e1 * (2 * n * n + n) + e2 * e2 * (2 * n * n + n) + 2 * e1 * e2 * n * n;
  auto [act, spec] = thermal_error(cfg, g, ThermalState::uniform(n));
  EXPECT_NEAR(act, M_PI * M_PI / 20 * s, 1e-15);
  EXPECT_GT(spec, 0);
}

TEST_F(Fixture, OffResonantScalesWithRabiSquared) {
  ThermalState th = ThermalState::uniform(0.2);
  auto [a1, s1] = offresonant_error(cfg, g, th, 1e6);
  auto [a2, s2] = offresonant_error(cfg, g, th, 2e6);
  EXPECT_NEAR(a2 / a1, 4.0, 1e-12);
  EXPECT_NEAR(s2 / s1, 4.0, 1e-9);  // (rabi eta^2)^2
  TrapLaserConfig solved = cfg;
  solved.offres_rabi = OffResonantRabi::Solved;
  EXPECT_DOUBLE_EQ(offresonant_rabi(solved, g), required_rabi(cfg, g));
  EXPECT_DOUBLE_EQ(offresonant_rabi(cfg, g), 0.1 * cfg.omega[AX_X][MODE_COM]);
}

TEST(Dephasing, SmallTimeLimit) {
  double t2 = 2.1, tg = 1e-3 * t2;
  double exact = dephasing_error(tg, t2, false);
  double lin = 1.6 * tg / (2 * t2);
  EXPECT_LT(std::abs(exact - lin) / lin, 1e-3);
  for (double r : {1e-4, 1e-3, 5e-3, 9e-3}) {
    double loc = dephasing_error(r * t2, t2, false), cor = dephasing_error(r * t2, t2, true);
    EXPECT_LT(std::abs(loc - cor) / loc, r);
  }
  EXPECT_EQ(dephasing_error(0, t2, false), 0.0);
  EXPECT_THROW(dephasing_error(1e-6, 0, false), std::invalid_argument);
}

TEST(Dephasing, FormulasAreExactChannelInfidelities) {
  Mat id = Mat::Identity(4, 4);
  for (double r : {1e-3, 0.05, 0.4, 2.0}) {
    double t2 = 1.0, t = r * t2;
    double pd = -0.5 * std::expm1(-t / t2);
    double fl = avg_gate_fidelity(entanglement_fidelity(local_dephasing_pair(pd), id), 4);
    double fc = avg_gate_fidelity(entanglement_fidelity(correlated_dephasing(t, t2), id), 4);
    EXPECT_NEAR(1 - fl, dephasing_error(t, t2, false), 1e-13) << r;
    EXPECT_NEAR(1 - fc, dephasing_error(t, t2, true), 1e-13) << r;
  }
}

TEST_F(Fixture, ScatteringIsLinearInGateTime) {
  auto [r1, m1] = scattering_error(cfg, 10e-6);
  auto [r2, m2] = scattering_error(cfg, 30e-6);
  EXPECT_NEAR(r2 / r1, 3.0, 1e-12);
  EXPECT_NEAR(m2 / m1, 3.0, 1e-12);
  EXPECT_NEAR(m1 / r1, 12.0, 1e-12);
  TrapLaserConfig z = cfg;
  z.detuning = 0;
  EXPECT_THROW(scattering_error(z, 1e-6), std::domain_error);
}

TEST_F(Fixture, TotalIsSumOfTerms) {
  ErrorBudget b = total_error(cfg, g, ThermalState::uniform(0.5));
  double s = b.eps_th_act + b.eps_th_spec + b.eps_off_act + b.eps_off_spec + b.eps_deph + b.eps_scatt_rayleigh +
             b.eps_scatt_raman;
  EXPECT_DOUBLE_EQ(b.eps_total, s);
  std::string row = b.csv_row(g.t_g * 1e6, 0.5);
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), 10);
  std::string exact = b.csv_row(g.t_g * 1e6, 0.5, RateConvention::Exact);
  EXPECT_DOUBLE_EQ(std::stod(exact.substr(exact.rfind(',') + 1)), 1.25 * b.eps_total);
  std::string head = ErrorBudget::csv_header();
  EXPECT_EQ(std::count(head.begin(), head.end(), ','), 10);
}

TEST(Heating, AddsPerAxisPhonons) {
  ThermalState th = heating_step(ThermalState::uniform(1.0));
  EXPECT_DOUBLE_EQ(th.nbar[AX_Z][0], 4.9);
  EXPECT_DOUBLE_EQ(th.nbar[AX_X][1], 1.255);
  EXPECT_DOUBLE_EQ(th.nbar[AX_Y][0], 1.255);
  EXPECT_THROW(ThermalState::uniform(-1), std::invalid_argument);
}

TEST(ChannelRate, ConventionsAndCap) {
  EXPECT_DOUBLE_EQ(channel_rate(0.1), 0.0625);
  EXPECT_DOUBLE_EQ(channel_rate(0.1, 15.0 / 16.0, RateConvention::Exact), 0.125);
  EXPECT_THROW(channel_rate(1.6), std::domain_error);
  EXPECT_THROW(channel_rate(1.3, 0.75), std::domain_error);
  EXPECT_THROW(channel_rate(-0.1), std::invalid_argument);
}

TEST(ChannelRate, ExactConventionRecoversInfidelity) {
  Mat u = Mat::Identity(4, 4);
  for (double eps : {1e-3, 0.05, 0.3}) {
    double p = channel_rate(eps, 15.0 / 16.0, RateConvention::Exact);
    for (auto k : {ChannelKind::Depolarizing, ChannelKind::Dephasing}) {
      double fg = avg_gate_fidelity(entanglement_fidelity(make_channel(k, p), u), 4);
      EXPECT_NEAR(1 - fg, eps, 1e-12);
    }
  }
}

TEST(BudgetGrid, DefaultRangeBracketsReference) {
  SweepConfig cfg;
  auto pts = run_budget_grid(cfg);
  double lo = 1e9, hi = 0;
  for (const auto& p : pts) {
    ASSERT_TRUE(p.valid) << p.error;
    lo = std::min(lo, p.budget.eps_total);
    hi = std::max(hi, p.budget.eps_total);
  }
  EXPECT_NEAR(lo, 2.4e-2, 0.3 * 2.4e-2);
  EXPECT_NEAR(hi, 0.30, 0.3 * 0.30);
}

}  // namespace
}  // namespace lsgate
