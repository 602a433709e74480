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
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "lsgate/audit.hpp"
#include "lsgate/witness.hpp"

namespace lsgate {
namespace {

struct GoldenRow {
  int gate;
  std::string label, signs;
  int flips;
  std::string flag;
};
struct GoldenTotal {
  int gate;
  std::string fraction;
  int percent;
};
struct Golden {
  std::vector<GoldenRow> rows;
  std::vector<GoldenTotal> totals;
};

Golden load(const std::string& name) {
  std::ifstream f(std::string(LSGATE_GOLDEN_DIR) + "/" + name + ".txt");
  EXPECT_TRUE(f.good()) << name;
  Golden g;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::string kind;
    is >> kind;
    if (kind == "row") {
      GoldenRow r;
      is >> r.gate >> r.label >> r.signs >> r.flips;
      if (!(is >> r.flag)) r.flag = "";
      g.rows.push_back(r);
    } else {
      GoldenTotal t;
      is >> t.gate >> t.fraction >> t.percent;
      g.totals.push_back(t);
    }
  }
  return g;
}

std::string signs_of(const AuditRow& r) {
  std::string s;
  for (size_t k = 0; k < r.signature.signs.size(); ++k) s += (k ? "," : "") + std::to_string(r.signature.signs[k]);
  return s;
}

struct Case {
  const char* file;
  Variant v;
  ChannelKind k;
  GeneratorLabel l;
};

const Case kCases[] = {
    {"nonft_depolarizing_nn", Variant::X_NONFT, ChannelKind::Depolarizing, GeneratorLabel::NN},
    {"nonft_dephasing_nn", Variant::X_NONFT, ChannelKind::Dephasing, GeneratorLabel::NN},
    {"nonft_depolarizing_z5", Variant::X_NONFT, ChannelKind::Depolarizing, GeneratorLabel::Z5_BIASED},
    {"nonft_dephasing_z5", Variant::X_NONFT, ChannelKind::Dephasing, GeneratorLabel::Z5_BIASED},
    {"ft_depolarizing_nn", Variant::X_FT, ChannelKind::Depolarizing, GeneratorLabel::NN},
    {"ft_dephasing_nn", Variant::X_FT, ChannelKind::Dephasing, GeneratorLabel::NN},
};

class GoldenTables : public ::testing::TestWithParam<Case> {};

TEST_P(GoldenTables, RowsAndTotalsMatch) {
  const Case& c = GetParam();
  Golden g = load(c.file);
  AuditTable t = generate_table(c.v, c.k, c.l);
  ASSERT_EQ(t.rows.size(), g.rows.size());
  for (size_t i = 0; i < g.rows.size(); ++i) {
    const auto& r = t.rows[i];
    EXPECT_EQ(static_cast<int>(r.gate) + 1, g.rows[i].gate);
    EXPECT_EQ(r.label, g.rows[i].label);
    EXPECT_EQ(signs_of(r), g.rows[i].signs) << r.label;
    EXPECT_EQ(r.signature.flips, g.rows[i].flips) << r.label;
    if (is_ft(c.v)) EXPECT_EQ(r.flag > 0 ? "+1" : "-1", g.rows[i].flag) << r.label;
  }
  ASSERT_EQ(t.summaries.size(), g.totals.size());
  for (size_t i = 0; i < g.totals.size(); ++i) {
    const auto& s = t.summaries[i];
    EXPECT_EQ(std::to_string(s.flips) + "/" + std::to_string(s.total), g.totals[i].fraction);
    EXPECT_EQ(s.percent(), g.totals[i].percent);
  }
}

TEST_P(GoldenTables, GoldenFileIsSelfConsistent) {
  Golden g = load(GetParam().file);
  std::map<int, int> sum;
  std::map<int, int> rows;
  for (const auto& r : g.rows) {
    int minus = 0;
    for (size_t p = r.signs.find("-1"); p != std::string::npos; p = r.signs.find("-1", p + 1)) ++minus;
    EXPECT_EQ(minus, r.flips) << r.label;
    ++rows[r.gate];
    if (r.flag != "-1") sum[r.gate] += r.flips;
  }
  for (const auto& t : g.totals) {
    int num = std::stoi(t.fraction), den = std::stoi(t.fraction.substr(t.fraction.find('/') + 1));
    EXPECT_EQ(num, sum[t.gate]) << GetParam().file << " gate " << t.gate;
    EXPECT_EQ(den, rows[t.gate] * 5);
    EXPECT_EQ(t.percent, static_cast<int>(std::lround(100.0 * num / den)));
  }
}

INSTANTIATE_TEST_SUITE_P(All, GoldenTables, ::testing::ValuesIn(kCases),
                         [](const auto& info) { return std::string(info.param.file); });

TEST(Propagation, Examples) {
  GeneratorSet nn = generator_set(GeneratorLabel::NN);
  AuditRow r = propagate_fault(FaultSpec{Variant::X_NONFT, 1, Letter::X, Letter::I}, nn);
  EXPECT_EQ(r.label, "X2I5");
  EXPECT_EQ(r.signature.signs, (std::vector<int>{-1, -1, 1, 1, -1}));
  EXPECT_EQ(r.signature.flips, 3);

  AuditRow f = propagate_fault(FaultSpec{Variant::X_FT, 1, Letter::Z, Letter::Z}, nn);
  EXPECT_EQ(f.label, "Z5Z6");
  EXPECT_EQ(f.flag, -1);

  AuditRow id = propagate_fault(FaultSpec{Variant::X_FT, 3, Letter::I, Letter::I}, nn);
  EXPECT_EQ(id.signature.flips, 0);
  EXPECT_EQ(id.flag, 1);
  EXPECT_THROW(propagate_fault(FaultSpec{Variant::X_NONFT, 4, Letter::X, Letter::I}, nn), std::out_of_range);
}

TEST(Propagation, PhaseErrorsStayZTypeThroughEntanglers) {
  Circuit c = build_parity_circuit(Variant::X_FT);
  for (size_t gi : c.two_qubit_positions()) {
    for (auto [a, b] : fault_letters(ChannelKind::Dephasing)) {
      std::vector<Letter> l(6, Letter::I);
      l[c.gates[gi].q0] = a;
      l[c.gates[gi].q1] = b;
      PauliString p(l);
      for (size_t k : c.two_qubit_positions()) p = conjugate_through_gate(p, c.gates[k]);
      for (Letter x : p.letters()) EXPECT_TRUE(x == Letter::I || x == Letter::Z);
    }
  }
}

TEST(Propagation, FirstOrderSlopeMatchesSimulation) {
  const double p = 1e-4;
  for (auto k : {ChannelKind::Depolarizing, ChannelKind::Dephasing}) {
    Circuit c = build_parity_circuit(Variant::X_NONFT);
    SimResult r = simulate(c, NoisePlan::uniform(k, p, 4));
    double sim = (1 - state_fidelity(r.state, c.target_state())) / p;
    double pred = first_order_slope(Variant::X_NONFT, k);
    EXPECT_NEAR(sim, pred, 0.01 * pred) << channel_name(k);
  }
}

TEST(Emitters, MarkdownAndCsv) {
  AuditTable t = generate_table(Variant::X_NONFT, ChannelKind::Depolarizing, GeneratorLabel::NN);
  std::string md = t.to_markdown();
  EXPECT_NE(md.find("16/75; %21"), std::string::npos);
  EXPECT_NE(md.find("| 2 | X2I5 | -1 -1 1 1 -1 | 3 |"), std::string::npos);
  std::string csv = t.to_csv();
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 61);
  EXPECT_EQ(csv.rfind(AuditTable::csv_header(), 0), 0u);
  AuditTable ft = generate_table(Variant::X_FT, ChannelKind::Dephasing, GeneratorLabel::NN);
  EXPECT_NE(ft.to_markdown().find("M_f(X)"), std::string::npos);
}

TEST(Emitters, SummaryFormatting) {
  GateSummary s{0, 16, 75};
  EXPECT_EQ(s.str(), "16/75; %21");
  GateSummary d{0, 4, 15};
  EXPECT_EQ(d.str(), "4/15; %27");
}

TEST(Tables, BiasedFtTablesAreGenerated) {
  for (auto k : {ChannelKind::Depolarizing, ChannelKind::Dephasing}) {
    AuditTable t = generate_table(Variant::X_FT, k, GeneratorLabel::Z5_BIASED);
    EXPECT_EQ(t.rows.size(), 6 * fault_letters(k).size());
    EXPECT_EQ(t.summaries.size(), 6u);
  }
  AuditTable z = generate_table(Variant::Z_NONFT, ChannelKind::Dephasing, GeneratorLabel::X_TYPE_NN);
  EXPECT_EQ(z.rows.size(), 12u);
}

}  // namespace
}  // namespace lsgate
