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

#ifndef LSGATE_CIRCUIT_HPP
#define LSGATE_CIRCUIT_HPP

#include <string>
#include <vector>

#include "lsgate/channels.hpp"
#include "lsgate/error_budget.hpp"
#include "lsgate/pauli.hpp"

namespace lsgate {

enum class Variant { X_NONFT, Z_NONFT, X_FT, Z_FT };

std::string variant_name(Variant v);
Variant parse_variant(std::string_view s);
inline bool is_ft(Variant v) { return v == Variant::X_FT || v == Variant::Z_FT; }
inline bool is_x_type(Variant v) { return v == Variant::X_NONFT || v == Variant::X_FT; }

/// Compiled parity-check circuit. Qubits 0..3 are data, 4 is the syndrome,
/// 5 (FT variants only) is the flag, measured in the X basis and post-selected on +1.
struct Circuit {
  Variant variant = Variant::X_NONFT;
  int n = 5;
  std::vector<NativeGate> gates;
  int syndrome = 4;
  int flag = -1;

  /// Indices into `gates` of the two-qubit gates, in order.
  std::vector<size_t> two_qubit_positions() const;
  /// Canonical input over all n qubits.
  Vec input_state() const;
  /// Canonical GHZ output over the five data/syndrome qubits.
  Vec target_state() const;

  /// One gate per line ("zz <theta> <a> <b>", "rz <theta> <q>", "rperp <theta> <q> phi=<phi>"),
  /// preceded by a "# variant <name> n <n>" header.
  std::string to_text() const;
  static Circuit from_text(const std::string& text);
};

Circuit build_parity_circuit(Variant v);

/// 2x2 or 4x4 unitary of a native gate.
Mat gate_matrix(const NativeGate& g);
/// Full 2^n unitary of a native gate (qubit 0 most significant).
Mat full_unitary(const NativeGate& g, int n);

struct DensityMatrix {
  Mat rho;
  int n = 0;

  static DensityMatrix from_pure(const Vec& psi);
  double trace() const { return std::real(rho.trace()); }
  double hermiticity_defect() const { return (rho - rho.adjoint()).cwiseAbs().maxCoeff(); }
  double min_eigenvalue() const;
};

/// In-place rho -> O rho O^dag for an operator on the listed qubits (first listed is most significant).
void apply_local(Mat& rho, int n, const Mat& op, const std::vector<int>& qubits);
void apply_channel(Mat& rho, int n, const KrausChannel& ch, const std::vector<int>& qubits);

/// Channel choice and per-two-qubit-gate rates for one circuit run.
struct NoisePlan {
  ChannelKind kind = ChannelKind::Depolarizing;
  std::vector<double> rates;  // one per two-qubit gate; empty means noiseless
  double p_me = 0;

  static NoisePlan noiseless(double p_me = 0) { return NoisePlan{ChannelKind::Depolarizing, {}, p_me}; }
  static NoisePlan uniform(ChannelKind k, double p, size_t gates, double p_me = 0);
};

struct BudgetSchedule {
  std::vector<ErrorBudget> budgets;  // budget of gate k at the pre-gate thermal state
  std::vector<ThermalState> states;
  std::vector<double> rates;
};

/// Rates for `gates` successive two-qubit gates, heating after each one when `heating` is set.
BudgetSchedule budget_schedule(const TrapLaserConfig& cfg, const GateGeometry& g, const ThermalState& initial,
                               size_t gates, bool heating, const HeatingRates& hr, ChannelKind kind,
                               RateConvention conv);

struct SimResult {
  DensityMatrix state;          // data + syndrome after flag post-selection
  double kept_probability = 1;  // flag post-selection probability (1 for non-FT)
  double min_trace = 1, max_trace = 1;  // trace range seen after each step
};

SimResult simulate(const Circuit& c, const NoisePlan& plan);
SimResult simulate(const Circuit& c, const NoisePlan& plan, const Vec& input);

double state_fidelity(const DensityMatrix& rho, const Vec& target);

/// Tr(rho P) for a Pauli string over the matrix's register.
std::complex<double> pauli_trace(const Mat& rho, const PauliString& p);
/// (1 - 2 p_me)^w Tr(rho P).
double expectation(const DensityMatrix& rho, const PauliString& p, double p_me);
/// Same value assembled from the noisy per-qubit effects.
double expectation_from_effects(const DensityMatrix& rho, const PauliString& p, double p_me);

/// Tr over the last qubit weighted by a 2x2 effect: returns the unnormalised reduced matrix.
Mat reduce_last_with_effect(const Mat& rho, const Mat& effect);

}  // namespace lsgate

#endif
