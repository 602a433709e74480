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


#ifndef LSGATE_WITNESS_HPP
#define LSGATE_WITNESS_HPP

#include <string>
#include <vector>

#include "lsgate/circuit.hpp"
#include "lsgate/pauli.hpp"

namespace lsgate {

enum class WitnessMethod { SL, CL };

std::string method_name(WitnessMethod m);
WitnessMethod parse_method(std::string_view s);

/// Stabilizer generators of the five-qubit GHZ states (qubit 4 is the syndrome).
/// NN and Z5_BIASED stabilize GHZ_z; the X_TYPE sets stabilize GHZ_x.
GeneratorSet generator_set(GeneratorLabel label);
/// Label matching a circuit's output (nearest-neighbour or syndrome-biased pairs).
GeneratorLabel label_for(Variant v, bool biased);

struct WitnessSpec {
  WitnessMethod method = WitnessMethod::SL;
  GeneratorLabel label = GeneratorLabel::NN;  // SL
  int partner = 1;                            // CL: data qubit x in [s5|sx], 1..4
  bool x_type_circuit = true;                 // CL: GHZ_z output, condition on |+>
  double p_me = 0;

  double bound() const { return method == WitnessMethod::SL ? 0.8 : 0.5; }
  void validate() const;
  /// "NN", "Z5_BIASED", ... for SL; "s5|s2" style for CL.
  std::string tag() const;
};

struct WitnessResult {
  double test_value = 0;
  double witness_value = 0;
  bool conclusive = false;
  std::vector<double> expectations;   // per generator (SL) or per II/XX/YY/ZZ term (CL)
  double conditioning_probability = 1;
};

WitnessResult sl_witness(const DensityMatrix& rho, const GeneratorSet& gs, double p_me);
WitnessResult cl_witness(const DensityMatrix& rho, int partner, bool x_type_circuit, double p_me);
WitnessResult evaluate(const DensityMatrix& rho, const WitnessSpec& spec);

/// Two-qubit (II + XX - YY + ZZ)/4 with noisy expectations. Returns the term values in `terms` if given.
double bell_test_value(const Mat& pair, double p_me, std::vector<double>* terms = nullptr);

/// Reduced state of `keep` after weighting every other qubit by `effect` (unnormalised).
Mat condition_on(const Mat& rho, int n, const std::vector<int>& keep, const Mat& effect);

/// Conclusive when every bipartition [s5|sx] is conclusive.
struct ClSummary {
  std::vector<WitnessResult> parts;
  bool conclusive = false;
  double worst = 0;  // largest (least negative) witness value
};
ClSummary cl_all_bipartitions(const DensityMatrix& rho, bool x_type_circuit, double p_me);

}  // namespace lsgate

#endif
