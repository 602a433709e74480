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


#include "lsgate/witness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lsgate/channels.hpp"

namespace lsgate {

std::string method_name(WitnessMethod m) { return m == WitnessMethod::SL ? "SL" : "CL"; }

WitnessMethod parse_method(std::string_view s) {
  if (s == "SL" || s == "sl") return WitnessMethod::SL;
  if (s == "CL" || s == "cl") return WitnessMethod::CL;
  throw std::invalid_argument("unknown witness method '" + std::string(s) + "'");
}

GeneratorSet generator_set(GeneratorLabel label) {
  const bool swap = label == GeneratorLabel::X_TYPE_NN || label == GeneratorLabel::X_TYPE_Z5;
  const bool biased = label == GeneratorLabel::Z5_BIASED || label == GeneratorLabel::X_TYPE_Z5;
  const Letter pair = swap ? Letter::X : Letter::Z;
  const Letter all = swap ? Letter::Z : Letter::X;
  GeneratorSet gs;
  gs.label = label;
  for (int k = 0; k < 4; ++k) {
    std::vector<Letter> l(5, Letter::I);
    l[k] = pair;
    l[biased ? 4 : k + 1] = pair;
    gs.generators.emplace_back(l);
  }
  gs.generators.emplace_back(std::vector<Letter>(5, all));
  return gs;
}

GeneratorLabel label_for(Variant v, bool biased) {
  if (is_x_type(v)) return biased ? GeneratorLabel::Z5_BIASED : GeneratorLabel::NN;
  return biased ? GeneratorLabel::X_TYPE_Z5 : GeneratorLabel::X_TYPE_NN;
}

void WitnessSpec::validate() const {
  if (!(p_me >= 0 && p_me <= 0.5)) throw std::domain_error("measurement flip probability outside [0, 1/2]");
  if (method == WitnessMethod::CL && (partner < 1 || partner > 4))
    throw std::invalid_argument("CL partner qubit must be in 1..4");
}

std::string WitnessSpec::tag() const {
  if (method == WitnessMethod::SL) return label_name(label);
  return "s5|s" + std::to_string(partner);
}

WitnessResult sl_witness(const DensityMatrix& rho, const GeneratorSet& gs, double p_me) {
  if (rho.n != 5) throw std::invalid_argument("SL witness expects a five-qubit state");
  WitnessResult r;
  double sum = 0;
  for (const auto& g : gs.generators) {
    double e = expectation(rho, g, p_me);
    r.expectations.push_back(e);
    sum += e;
  }
  r.test_value = sum / static_cast<double>(gs.generators.size());
  r.witness_value = 0.8 - r.test_value;
  r.conclusive = r.witness_value < 0;
  return r;
}

Mat condition_on(const Mat& rho, int n, const std::vector<int>& keep, const Mat& effect) {
  std::vector<int> rest;
  for (int q = 0; q < n; ++q)
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) rest.push_back(q);
  const int kd = 1 << keep.size(), rd = 1 << rest.size();
  auto index = [&](int a, int r) {
    int ix = 0;
    for (size_t t = 0; t < keep.size(); ++t)
      if ((a >> (keep.size() - 1 - t)) & 1) ix |= 1 << (n - 1 - keep[t]);
    for (size_t t = 0; t < rest.size(); ++t)
      if ((r >> (rest.size() - 1 - t)) & 1) ix |= 1 << (n - 1 - rest[t]);
    return ix;
  };
  // Weight W = effect on each traced qubit; out = Tr_rest[rho (I x W)].
  Mat w = Mat::Identity(1, 1);
  for (size_t t = 0; t < rest.size(); ++t) {
    Mat next(w.rows() * 2, w.cols() * 2);
    for (int i = 0; i < w.rows(); ++i)
      for (int j = 0; j < w.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = w(i, j) * effect;
    w = next;
  }
  Mat out = Mat::Zero(kd, kd);
  for (int a = 0; a < kd; ++a)
    for (int b = 0; b < kd; ++b) {
      std::complex<double> acc = 0;
      for (int r = 0; r < rd; ++r)
        for (int s = 0; s < rd; ++s) acc += rho(index(a, r), index(b, s)) * w(s, r);
      out(a, b) = acc;
    }
  return out;
}

double bell_test_value(const Mat& pair, double p_me, std::vector<double>* terms) {
  DensityMatrix d{pair, 2};
  const double vals[4] = {1.0, expectation(d, PauliString::parse_dense("XX"), p_me),
                          expectation(d, PauliString::parse_dense("YY"), p_me),
                          expectation(d, PauliString::parse_dense("ZZ"), p_me)};
  if (terms) terms->assign(vals, vals + 4);
  return (vals[0] + vals[1] - vals[2] + vals[3]) / 4;
}

WitnessResult cl_witness(const DensityMatrix& rho, int partner, bool x_type_circuit, double p_me) {
  if (rho.n != 5) throw std::invalid_argument("CL witness expects a five-qubit state");
  if (partner < 1 || partner > 4) throw std::invalid_argument("CL partner qubit must be in 1..4");
  auto eff = noisy_measurement_effects(x_type_circuit ? Letter::X : Letter::Z, p_me);
  Mat pair = condition_on(rho.rho, 5, {partner - 1, 4}, eff.plus);
  WitnessResult r;
  r.conditioning_probability = std::real(pair.trace());
  if (r.conditioning_probability < 1e-12) throw std::runtime_error("CL conditioning probability is degenerate");
  pair /= r.conditioning_probability;
  r.test_value = bell_test_value(pair, p_me, &r.expectations);
  r.witness_value = 0.5 - r.test_value;
  r.conclusive = r.witness_value < 0;
  return r;
}

WitnessResult evaluate(const DensityMatrix& rho, const WitnessSpec& spec) {
  spec.validate();
  if (spec.method == WitnessMethod::SL) return sl_witness(rho, generator_set(spec.label), spec.p_me);
  return cl_witness(rho, spec.partner, spec.x_type_circuit, spec.p_me);
}

ClSummary cl_all_bipartitions(const DensityMatrix& rho, bool x_type_circuit, double p_me) {
  ClSummary s;
  s.conclusive = true;
  s.worst = -1e300;
  for (int x = 1; x <= 4; ++x) {
    s.parts.push_back(cl_witness(rho, x, x_type_circuit, p_me));
    s.conclusive = s.conclusive && s.parts.back().conclusive;
    s.worst = std::max(s.worst, s.parts.back().witness_value);
  }
  return s;
}

}  // namespace lsgate
