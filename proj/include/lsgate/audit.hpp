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


#ifndef LSGATE_AUDIT_HPP
#define LSGATE_AUDIT_HPP

#include <string>
#include <utility>
#include <vector>

#include "lsgate/channels.hpp"
#include "lsgate/circuit.hpp"
#include "lsgate/pauli.hpp"

namespace lsgate {

/// Single Pauli fault inserted right after one two-qubit gate.
struct FaultSpec {
  Variant variant = Variant::X_NONFT;
  size_t gate = 0;   // index among the circuit's two-qubit gates, 0-based
  Letter first = Letter::I, second = Letter::I;  // on the gate's first and second operand
};

struct AuditRow {
  size_t gate = 0;
  std::string label;        // e.g. "X2I5", 1-based qubits
  PauliString final_pauli;  // over the full register, phase dropped
  Signature signature;
  int flag = 1;             // X-basis flag outcome; always +1 without a flag
};

struct GateSummary {
  size_t gate = 0;
  int flips = 0;   // flag +1 rows only
  int total = 0;   // rows x generators
  int percent() const;
  /// "16/75; %21"
  std::string str() const;
};

struct AuditTable {
  Variant variant = Variant::X_NONFT;
  ChannelKind channel = ChannelKind::Depolarizing;
  GeneratorLabel label = GeneratorLabel::NN;
  std::vector<AuditRow> rows;
  std::vector<GateSummary> summaries;

  std::string to_markdown() const;
  static std::string csv_header();
  std::string to_csv() const;
};

/// Fault letters per gate, in table order.
std::vector<std::pair<Letter, Letter>> fault_letters(ChannelKind k);

AuditRow propagate_fault(const Circuit& c, const FaultSpec& fs, const GeneratorSet& gs);
AuditRow propagate_fault(const FaultSpec& fs, const GeneratorSet& gs);

AuditTable generate_table(Variant v, ChannelKind k, GeneratorLabel label);

/// Sum over faults of (fault weight) x [final Pauli changes the target state], for uniform rates p:
/// first-order fidelity loss is this slope times p. Flagged faults count as removed.
double first_order_slope(Variant v, ChannelKind k);

}  // namespace lsgate

#endif
