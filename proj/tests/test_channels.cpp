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
#include <random>

#include <Eigen/Eigenvalues>

#include "lsgate/channels.hpp"
#include "lsgate/circuit.hpp"

namespace lsgate {
namespace {

Mat zz_gate() { return gate_matrix(NativeGate::zz(std::numbers::pi / 2, 0, 1)); }

Mat random_state(int d, std::mt19937_64& rng) {
  Vec a = haar_state(d, rng), b = haar_state(d, rng);
  return 0.7 * a * a.adjoint() + 0.3 * b * b.adjoint();
}

TEST(Kraus, ChannelsAreTracePreserving) {
  for (double p : {0.0, 1e-3, 0.2, 0.75}) {
    EXPECT_TRUE(depolarizing2q(p).is_trace_preserving());
    EXPECT_TRUE(dephasing2q(p).is_trace_preserving());
  }
  EXPECT_TRUE(depolarizing2q(15.0 / 16.0).is_trace_preserving());
  for (double t : {0.0, 1e-4, 0.3, 5.0}) EXPECT_LT(correlated_dephasing(t, 2.1).completeness_defect(), 1e-14);
  for (double pd : {0.0, 0.1, 0.5}) EXPECT_LT(local_dephasing_pair(pd).completeness_defect(), 1e-14);
  EXPECT_EQ(depolarizing2q(0.1).ops.size(), 16u);
  EXPECT_EQ(dephasing2q(0.1).ops.size(), 4u);
}

TEST(Kraus, RateDomains) {
  EXPECT_THROW(depolarizing2q(-0.01), std::domain_error);
  EXPECT_THROW(depolarizing2q(0.95), std::domain_error);
  EXPECT_THROW(dephasing2q(0.8), std::domain_error);
  EXPECT_THROW(correlated_dephasing(-1, 1), std::invalid_argument);
  EXPECT_EQ(channel_cap(ChannelKind::Dephasing), 0.75);
  EXPECT_EQ(parse_channel(channel_name(ChannelKind::Dephasing)), ChannelKind::Dephasing);
  EXPECT_THROW(parse_channel("amplitude"), std::invalid_argument);
}

TEST(Kraus, FullDepolarizationGivesMaximallyMixed) {
  std::mt19937_64 rng(3);
  Mat rho = random_state(4, rng);
  Mat out = depolarizing2q(15.0 / 16.0).apply(rho);
  EXPECT_LT((out - Mat::Identity(4, 4) / 4).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Kraus, DephasingKillsCoherencesOnly) {
  std::mt19937_64 rng(4);
  Mat rho = random_state(4, rng);
  Mat out = dephasing2q(0.75).apply(rho);
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(std::abs(out(i, i) - rho(i, i)), 0, 1e-14);
    for (int j = 0; j < 4; ++j)
      if (i != j) EXPECT_NEAR(std::abs(out(i, j)), 0, 1e-14);
  }
}

TEST(Kraus, RenormalizedRestoresCompleteness) {
  KrausChannel ch = depolarizing2q(0.2);
  ch.ops[0] *= 1.1;
  EXPECT_FALSE(ch.is_trace_preserving());
  EXPECT_TRUE(renormalized(ch).is_trace_preserving());
}

TEST(Fidelity, EntanglementFidelityOfPauliChannels) {
  Mat u = zz_gate();
  for (double p : {1e-3, 1e-2, 0.1, 0.5}) {
    for (auto k : {ChannelKind::Depolarizing, ChannelKind::Dephasing}) {
      double fe = entanglement_fidelity(make_channel(k, p).after(u), u);
      EXPECT_NEAR(fe, 1 - p, 1e-13);
      EXPECT_NEAR(avg_gate_fidelity(fe, 4), 1 - 0.8 * p, 1e-13);
    }
  }
  EXPECT_NEAR(entanglement_fidelity(identity_channel(2).after(u), u), 1.0, 1e-14);
  EXPECT_NEAR(avg_gate_fidelity(0.0, 2), 1.0 / 3.0, 1e-15);
}

TEST(Fidelity, HaarAverageMatchesEntanglementRoute) {
  Mat u = zz_gate();
  for (auto k : {ChannelKind::Depolarizing, ChannelKind::Dephasing}) {
    KrausChannel ch = make_channel(k, 0.05).after(u);
    double fg = avg_gate_fidelity(entanglement_fidelity(ch, u), 4);
    HaarEstimate h = haar_average_fidelity(ch, u, 10000, 2024);
    EXPECT_GT(h.sem, 0);
    EXPECT_LT(std::abs(h.mean - fg), 3 * h.sem) << channel_name(k);
  }
}

TEST(Fidelity, HaarStatesAreNormalized) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 10; ++k) EXPECT_NEAR(haar_state(8, rng).norm(), 1.0, 1e-14);
}

TEST(Measurement, NoisyEffects) {
  for (Letter a : {Letter::X, Letter::Y, Letter::Z}) {
    auto e = noisy_measurement_effects(a, 0.1);
    EXPECT_LT((e.plus + e.minus - Mat::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
    // <+a| E_+ |+a> = 1 - p_me
    Eigen::SelfAdjointEigenSolver<Mat> es(pauli_matrix(a));
    Vec plus = es.eigenvectors().col(1);
    EXPECT_NEAR(std::real(plus.dot(e.plus * plus)), 0.9, 1e-14);
    EXPECT_LT(((e.plus - e.minus) - 0.8 * pauli_matrix(a)).cwiseAbs().maxCoeff(), 1e-15);
  }
  EXPECT_THROW(noisy_measurement_effects(Letter::I, 0), std::invalid_argument);
  EXPECT_THROW(noisy_measurement_effects(Letter::Z, 0.6), std::domain_error);
}

}  // namespace
}  // namespace lsgate
