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

#include <cmath>
#include <numbers>

#include "lsgate/gate_design.hpp"

namespace lsgate {
namespace {

TEST(LambDicke, ScalesWithProjectionAndFrequency) {
  TrapLaserConfig c = TrapLaserConfig::defaults();
  ModeTable eta = lamb_dicke(c);
  auto e = c.direction();
  double ref = c.delta_k * std::sqrt(kHbar / (2 * c.ion_mass * c.omega[AX_X][MODE_COM]));
  EXPECT_NEAR(eta[AX_X][MODE_COM], ref * e[0], 1e-15);
  EXPECT_NEAR(eta[AX_X][MODE_COM] / eta[AX_X][MODE_ZZ],
              std::sqrt(c.omega[AX_X][MODE_ZZ] / c.omega[AX_X][MODE_COM]), 1e-12);
  EXPECT_NEAR(e[0] * e[0] + e[1] * e[1] + e[2] * e[2], 1.0, 1e-15);
  EXPECT_GT(eta[AX_X][MODE_COM], 0.1);
  EXPECT_LT(eta[AX_X][MODE_COM], 0.2);
}

TEST(LambDicke, AlignedBeamHasNoSpectatorCoupling) {
  TrapLaserConfig c = TrapLaserConfig::defaults();
  c.misalign_theta = 0;
  ModeTable eta = lamb_dicke(c);
  EXPECT_EQ(eta[AX_Y][MODE_COM], 0.0);
  EXPECT_EQ(eta[AX_Z][MODE_ZZ], 0.0);
}

TEST(Geometry, BothModesCloseAtGateTime) {
  TrapLaserConfig c = TrapLaserConfig::defaults();
  for (double tg : {8e-6, 10e-6, 23e-6, 57e-6, 100e-6}) {
    GateGeometry g = select_geometry(tg, c);
    double rabi = required_rabi(c, g);
    for (Mode m : {MODE_COM, MODE_ZZ})
      for (int ion : {0, 1}) {
        EXPECT_LT(std::abs(phase_trajectory(tg, m, ion, c, g, rabi)), 1e-9) << tg;
        EXPECT_GT(std::abs(phase_trajectory(0.37 * tg, m, ion, c, g, rabi)), 1e-6);
      }
    EXPECT_NEAR(g.delta_com * tg, kTwoPi * g.r, 1e-9);
    EXPECT_NEAR(g.delta_zz * tg, kTwoPi * g.p, 1e-9);
    EXPECT_NEAR(g.f1 + g.f2, 1.0, 1e-15);
    double split = g.omega_x_com - g.omega_x_zz;
    double nominal = c.omega[AX_X][MODE_COM] - c.omega[AX_X][MODE_ZZ];
    EXPECT_LE(split, nominal * (1 + 1e-12));
    EXPECT_GE(split, 0.5 * nominal);
  }
}

TEST(Geometry, PhaseCoupling) {
  TrapLaserConfig c = TrapLaserConfig::defaults();
  GateGeometry g = select_geometry(40e-6, c);
  double rabi = required_rabi(c, g);
  EXPECT_NEAR(std::abs(coupling_strength(c, g, rabi)) * g.t_g, std::numbers::pi / 4, 1e-12);
  EXPECT_NEAR(coupling_strength(c, g, 2 * rabi), 4 * coupling_strength(c, g, rabi), 1e-9);
}

TEST(Geometry, ShortGateHasNoSolution) {
  TrapLaserConfig c = TrapLaserConfig::defaults();
  EXPECT_THROW(select_geometry(5e-6, c), std::runtime_error);
  EXPECT_NO_THROW(select_geometry(7.5e-6, c));
  EXPECT_THROW(select_geometry(-1, c), std::invalid_argument);
}

TEST(Geometry, RabiCapIsEnforced) {
  TrapLaserConfig c = TrapLaserConfig::defaults();
  GateGeometry g = select_geometry(20e-6, c);
  c.rabi_cap = 0.5 * required_rabi(c, g);
  EXPECT_THROW(required_rabi(c, g), std::runtime_error);
}

TEST(Config, DefaultsValidate) {
  EXPECT_NO_THROW(TrapLaserConfig::defaults().validate());
  TrapLaserConfig c = TrapLaserConfig::defaults();
  c.t2 = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = TrapLaserConfig::defaults();
  c.omega[AX_Y][MODE_ZZ] = -1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace lsgate
