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
#include <random>
#include <unsupported/Eigen/KroneckerProduct>

#include "lsgate/channels.hpp"
#include "lsgate/circuit.hpp"

namespace lsgate {
namespace {

const Variant kAll[] = {Variant::X_NONFT, Variant::Z_NONFT, Variant::X_FT, Variant::Z_FT};

// Dense reference: every operator embedded into the full 2^n space.
Mat embed(const Mat& op, int n, const std::vector<int>& qs) {
  const int dim = 1 << n, k = static_cast<int>(qs.size());
  Mat out = Mat::Zero(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      int rs = 0, cs = 0;
      bool rest_equal = true;
      for (int q = 0; q < n; ++q) {
        int rb = (r >> (n - 1 - q)) & 1, cb = (c >> (n - 1 - q)) & 1;
        int t = -1;
        for (int j = 0; j < k; ++j)
          if (qs[j] == q) t = j;
        if (t < 0) {
          rest_equal = rest_equal && rb == cb;
        } else {
          rs |= rb << (k - 1 - t);
          cs |= cb << (k - 1 - t);
        }
      }
      if (rest_equal) out(r, c) = op(rs, cs);
    }
  return out;
}

Mat dense_simulate(const Circuit& c, const NoisePlan& plan, double* kept) {
  Vec psi = c.input_state();
  Mat rho = psi * psi.adjoint();
  size_t k2 = 0;
  for (const auto& g : c.gates) {
    std::vector<int> qs = {g.q0};
    if (g.two_qubit()) qs.push_back(g.q1);
    Mat u = full_unitary(g, c.n);
    rho = u * rho * u.adjoint();
    if (g.two_qubit() && !plan.rates.empty()) {
      KrausChannel ch = make_channel(plan.kind, plan.rates[k2]);
      Mat acc = Mat::Zero(rho.rows(), rho.cols());
      for (const auto& op : ch.ops) {
        Mat big = embed(op, c.n, qs);
        acc += big * rho * big.adjoint();
      }
      rho = acc;
    }
    if (g.two_qubit()) ++k2;
  }
  *kept = 1;
  if (c.flag >= 0) {
    auto e = noisy_measurement_effects(Letter::X, plan.p_me);
    Mat w = Eigen::kroneckerProduct(Mat::Identity(32, 32), e.plus).eval();
    Mat m = rho * w;
    Mat red = Mat::Zero(32, 32);
    for (int i = 0; i < 32; ++i)
      for (int j = 0; j < 32; ++j) red(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
    *kept = std::real(red.trace());
    rho = red / *kept;
  }
  return rho;
}

TEST(Circuit, NoiselessOutputsCanonicalGhz) {
  for (Variant v : kAll) {
    Circuit c = build_parity_circuit(v);
    SimResult r = simulate(c, NoisePlan::noiseless());
    EXPECT_NEAR(state_fidelity(r.state, c.target_state()), 1.0, 1e-12) << variant_name(v);
    EXPECT_NEAR(r.kept_probability, 1.0, 1e-12);
    EXPECT_EQ(r.state.n, 5);
    EXPECT_EQ(c.two_qubit_positions().size(), is_ft(v) ? 6u : 4u);
  }
}

TEST(Circuit, NoisyMatchesDenseReference) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 0.3);
  for (Variant v : kAll)
    for (auto k : {ChannelKind::Depolarizing, ChannelKind::Dephasing}) {
      Circuit c = build_parity_circuit(v);
      NoisePlan plan{k, {}, 0.02};
      for (size_t g = 0; g < c.two_qubit_positions().size(); ++g) plan.rates.push_back(u(rng));
      SimResult r = simulate(c, plan);
      double kept = 0;
      Mat ref = dense_simulate(c, plan, &kept);
      EXPECT_LT((r.state.rho - ref).cwiseAbs().maxCoeff(), 1e-12) << variant_name(v) << channel_name(k);
      EXPECT_NEAR(r.kept_probability, kept, 1e-12);
      EXPECT_NEAR(r.state.trace(), 1.0, 1e-12);
      EXPECT_LT(r.state.hermiticity_defect(), 1e-12);
      EXPECT_GT(r.state.min_eigenvalue(), -1e-12);
      EXPECT_NEAR(r.min_trace, 1.0, 1e-12);
      EXPECT_NEAR(r.max_trace, 1.0, 1e-12);
    }
}

TEST(Circuit, FlagPostSelectionDiscardsWeight) {
  Circuit c = build_parity_circuit(Variant::X_FT);
  SimResult r = simulate(c, NoisePlan::uniform(ChannelKind::Depolarizing, 0.1, 6));
  EXPECT_LT(r.kept_probability, 1.0);
  EXPECT_GT(r.kept_probability, 0.5);
}

TEST(Circuit, TextRoundTrip) {
  for (Variant v : kAll) {
    Circuit c = build_parity_circuit(v);
    Circuit d = Circuit::from_text(c.to_text());
    EXPECT_EQ(d.variant, v);
    EXPECT_EQ(d.n, c.n);
    EXPECT_EQ(d.flag, c.flag);
    ASSERT_EQ(d.gates.size(), c.gates.size());
    for (size_t k = 0; k < c.gates.size(); ++k) EXPECT_EQ(d.gates[k].str(), c.gates[k].str());
    auto plan = NoisePlan::uniform(ChannelKind::Dephasing, 0.05, c.two_qubit_positions().size());
    EXPECT_LT((simulate(c, plan).state.rho - simulate(d, plan).state.rho).cwiseAbs().maxCoeff(), 1e-15);
  }
  EXPECT_THROW(Circuit::from_text("zz 1 0 1\n"), std::invalid_argument);
}

TEST(Circuit, PlanValidation) {
  Circuit c = build_parity_circuit(Variant::X_NONFT);
  EXPECT_THROW(simulate(c, NoisePlan::uniform(ChannelKind::Depolarizing, 0.1, 3)), std::invalid_argument);
  EXPECT_THROW(simulate(c, NoisePlan::noiseless(), Vec::Zero(8)), std::invalid_argument);
}

TEST(Circuit, ApplyLocalMatchesEmbedding) {
  std::mt19937_64 rng(9);
  Vec a = haar_state(16, rng);
  Mat rho = a * a.adjoint();
  Vec o = haar_state(4, rng);
  Mat op = o * haar_state(4, rng).adjoint();  // arbitrary, non-unitary
  for (std::vector<int> qs : {std::vector<int>{0, 3}, {3, 0}, {2, 1}}) {
    Mat got = rho;
    apply_local(got, 4, op, qs);
    Mat big = embed(op, 4, qs);
    EXPECT_LT((got - big * rho * big.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Expectation, PauliTraceMatchesDense) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> l(0, 3);
  Vec a = haar_state(32, rng), b = haar_state(32, rng);
  Mat rho = 0.6 * a * a.adjoint() + 0.4 * b * b.adjoint();
  for (int t = 0; t < 50; ++t) {
    std::vector<Letter> ls;
    for (int q = 0; q < 5; ++q) ls.push_back(static_cast<Letter>(l(rng)));
    PauliString p(ls, l(rng));
    std::complex<double> ref = (rho * pauli_matrix(p)).trace();
    EXPECT_LT(std::abs(pauli_trace(rho, p) - ref), 1e-13);
    if (p.is_hermitian()) {
      DensityMatrix d{rho, 5};
      EXPECT_NEAR(expectation(d, p, 0.03), expectation_from_effects(d, p, 0.03), 1e-13);
    }
  }
}

TEST(Expectation, AttenuationIsExactPower) {
  Circuit c = build_parity_circuit(Variant::X_NONFT);
  DensityMatrix ghz = DensityMatrix::from_pure(c.target_state());
  for (const char* s : {"Z3", "Z1Z2", "X1X2X3X4X5"}) {
    PauliString p = PauliString::parse(s, 5);
    double ideal = expectation(ghz, p, 0);
    double noisy = expectation_from_effects(ghz, p, 1e-3);
    double expect = (p.weight() == 1 ? 0.0 : 1.0) * std::pow(1 - 2e-3, static_cast<double>(p.weight()));
    EXPECT_NEAR(noisy, expect, 1e-12) << s;
    EXPECT_NEAR(noisy, ideal * std::pow(1 - 2e-3, static_cast<double>(p.weight())), 1e-12);
  }
  EXPECT_THROW(expectation(ghz, PauliString::parse("+iX1", 5), 0), std::invalid_argument);
}

TEST(Reduce, IdentityEffectIsPartialTrace) {
  std::mt19937_64 rng(2);
  Vec a = haar_state(8, rng);
  Mat rho = a * a.adjoint();
  Mat red = reduce_last_with_effect(rho, Mat::Identity(2, 2));
  EXPECT_NEAR(std::real(red.trace()), 1.0, 1e-14);
  Mat ref = Mat::Zero(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) ref(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
  EXPECT_LT((red - ref).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Schedule, HeatingRaisesLaterRates) {
  TrapLaserConfig cfg = TrapLaserConfig::defaults();
  GateGeometry g = select_geometry(20e-6, cfg);
  auto s = budget_schedule(cfg, g, ThermalState::uniform(0.1), 6, true, {}, ChannelKind::Depolarizing,
                           RateConvention::Nominal);
  ASSERT_EQ(s.rates.size(), 6u);
  for (size_t k = 1; k < 6; ++k) EXPECT_GT(s.rates[k], s.rates[k - 1]);
  EXPECT_DOUBLE_EQ(s.states[2].nbar[AX_Z][0], 0.1 + 2 * 3.9);
  auto flat = budget_schedule(cfg, g, ThermalState::uniform(0.1), 4, false, {}, ChannelKind::Dephasing,
                              RateConvention::Nominal);
  for (double p : flat.rates) EXPECT_DOUBLE_EQ(p, flat.rates[0]);
  EXPECT_DOUBLE_EQ(flat.rates[0], 0.625 * flat.budgets[0].eps_total);
}

TEST(Variants, Names) {
  for (Variant v : kAll) EXPECT_EQ(parse_variant(variant_name(v)), v);
  EXPECT_THROW(parse_variant("Y_NONFT"), std::invalid_argument);
}

}  // namespace
}  // namespace lsgate
