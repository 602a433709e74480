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


#include "lsgate/audit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lsgate/witness.hpp"

namespace lsgate {

int GateSummary::percent() const { return total == 0 ? 0 : static_cast<int>(std::lround(100.0 * flips / total)); }

std::string GateSummary::str() const {
  return std::to_string(flips) + "/" + std::to_string(total) + "; %" + std::to_string(percent());
}

std::vector<std::pair<Letter, Letter>> fault_letters(ChannelKind k) {
  using L = Letter;
  if (k == ChannelKind::Dephasing) return {{L::Z, L::I}, {L::I, L::Z}, {L::Z, L::Z}};
  return {{L::X, L::I}, {L::I, L::X}, {L::X, L::X}, {L::X, L::Y}, {L::Y, L::X},
          {L::X, L::Z}, {L::Z, L::X}, {L::Y, L::I}, {L::I, L::Y}, {L::Y, L::Y},
          {L::Y, L::Z}, {L::Z, L::Y}, {L::Z, L::I}, {L::I, L::Z}, {L::Z, L::Z}};
}

AuditRow propagate_fault(const Circuit& c, const FaultSpec& fs, const GeneratorSet& gs) {
  auto pos = c.two_qubit_positions();
  if (fs.gate >= pos.size()) throw std::out_of_range("fault gate index beyond the circuit's two-qubit gates");
  const NativeGate& g = c.gates[pos[fs.gate]];
  std::vector<Letter> l(c.n, Letter::I);
  l[g.q0] = fs.first;
  l[g.q1] = fs.second;
  PauliString p(l);
  for (size_t k = pos[fs.gate] + 1; k < c.gates.size(); ++k) p = conjugate_through_gate(p, c.gates[k]);

  AuditRow row;
  row.gate = fs.gate;
  row.label = std::string(1, letter_char(fs.first)) + std::to_string(g.q0 + 1) + letter_char(fs.second) +
              std::to_string(g.q1 + 1);
  row.final_pauli = p.with_phase(0);
  std::vector<Letter> five(p.letters().begin(), p.letters().begin() + 5);
  row.signature = stabilizer_signature(PauliString(five), gs);
  if (c.flag >= 0) row.flag = p.commutes_with(PauliString::single(c.n, c.flag, Letter::X)) ? 1 : -1;
  return row;
}

AuditRow propagate_fault(const FaultSpec& fs, const GeneratorSet& gs) {
  return propagate_fault(build_parity_circuit(fs.variant), fs, gs);
}

AuditTable generate_table(Variant v, ChannelKind k, GeneratorLabel label) {
  AuditTable t;
  t.variant = v;
  t.channel = k;
  t.label = label;
  Circuit c = build_parity_circuit(v);
  GeneratorSet gs = generator_set(label);
  auto letters = fault_letters(k);
  size_t ngates = c.two_qubit_positions().size();
  for (size_t gi = 0; gi < ngates; ++gi) {
    GateSummary s;
    s.gate = gi;
    s.total = static_cast<int>(letters.size() * gs.generators.size());
    for (auto [a, b] : letters) {
      AuditRow r = propagate_fault(c, FaultSpec{v, gi, a, b}, gs);
      if (r.flag > 0) s.flips += r.signature.flips;
      t.rows.push_back(std::move(r));
    }
    t.summaries.push_back(s);
  }
  return t;
}

namespace {

std::string signs_str(const Signature& s, char sep) {
  std::string out;
  for (size_t k = 0; k < s.signs.size(); ++k) {
    if (k) out += sep;
    out += s.signs[k] > 0 ? "1" : "-1";
  }
  return out;
}

}  // namespace

std::string AuditTable::to_markdown() const {
  const bool ft = is_ft(variant);
  std::ostringstream os;
  os << "### " << variant_name(variant) << ", " << channel_name(channel) << ", " << label_name(label) << "\n\n";
  os << "| gate | error | g1 g2 g3 g4 g5 | # -1's |" << (ft ? " M_f(X) |" : "") << "\n";
  os << "|---|---|---|---|" << (ft ? "---|" : "") << "\n";
  size_t si = 0;
  for (size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    os << "| " << r.gate + 1 << " | " << r.label << " | " << signs_str(r.signature, ' ') << " | "
       << r.signature.flips << " |";
    if (ft) os << " " << (r.flag > 0 ? "+1" : "-1") << " |";
    os << "\n";
    bool last = k + 1 == rows.size() || rows[k + 1].gate != r.gate;
    if (last && si < summaries.size())
      os << "| " << r.gate + 1 << " | Total | " << summaries[si++].str() << " | |" << (ft ? " |" : "") << "\n";
  }
  return os.str();
}

std::string AuditTable::csv_header() { return "variant,channel,generators,gate,error,final,g1,g2,g3,g4,g5,flips,flag"; }

std::string AuditTable::to_csv() const {
  std::ostringstream os;
  os << csv_header() << "\n";
  for (const auto& r : rows)
    os << variant_name(variant) << "," << channel_name(channel) << "," << label_name(label) << "," << r.gate + 1
       << "," << r.label << "," << r.final_pauli.str() << "," << signs_str(r.signature, ',') << ","
       << r.signature.flips << "," << r.flag << "\n";
  return os.str();
}

double first_order_slope(Variant v, ChannelKind k) {
  Circuit c = build_parity_circuit(v);
  GeneratorSet gs = generator_set(label_for(v, false));
  auto letters = fault_letters(k);
  const double w = 1.0 / static_cast<double>(letters.size());
  double slope = 0;
  for (size_t gi = 0; gi < c.two_qubit_positions().size(); ++gi)
    for (auto [a, b] : letters) {
      AuditRow r = propagate_fault(c, FaultSpec{v, gi, a, b}, gs);
      if (r.flag > 0 && r.signature.flips > 0) slope += w;
    }
  return slope;
}

}  // namespace lsgate
