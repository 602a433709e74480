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


#ifndef LSGATE_SWEEP_HPP
#define LSGATE_SWEEP_HPP

#include <string>
#include <vector>

#include "lsgate/config.hpp"

namespace lsgate {

struct WitnessOutcome {
  std::string name;   // WitnessChoice::name()
  std::string tag;    // generator label or "all" for CL
  double test_value = 0;
  double witness_value = 0;
  bool conclusive = false;
  double conditioning_probability = 1;  // smallest over CL bipartitions
};

struct PointRecord {
  double tg_us = 0;
  double nbar = 0;
  ChannelKind channel = ChannelKind::Depolarizing;
  Variant variant = Variant::X_NONFT;
  bool valid = false;
  std::string error;          // reason when invalid
  double eps_first = 0;       // total budget of the first gate
  double eps_last = 0;        // total budget of the last gate (after heating)
  double p_first = 0;
  double p_last = 0;
  double fidelity = 0;
  double kept_probability = 1;
  std::vector<WitnessOutcome> witnesses;
};

struct SweepResult {
  SweepConfig config;
  std::vector<double> tg_us;
  std::vector<double> nbar;
  /// Ordered by channel, variant, tg, nbar (nbar fastest).
  std::vector<PointRecord> records;

  const PointRecord& at(size_t channel, size_t variant, size_t it, size_t in) const;
  /// Witness value grid [nbar][tg] for one panel; NaN where invalid.
  std::vector<std::vector<double>> witness_grid(size_t channel, size_t variant, size_t witness) const;
  std::vector<std::vector<double>> fidelity_grid(size_t channel, size_t variant) const;
  /// Number of valid, conclusive cells of one panel.
  int conclusive_cells(size_t channel, size_t variant, size_t witness) const;
};

/// Budget-only sweep row: first-gate budget at each grid point.
struct BudgetPoint {
  double tg_us = 0, nbar = 0;
  bool valid = false;
  std::string error;
  ErrorBudget budget;
};
std::vector<BudgetPoint> run_budget_grid(const SweepConfig& cfg);

/// Simulates one grid point for one channel and variant.
PointRecord evaluate_point(const SweepConfig& cfg, double tg_us, double nbar, ChannelKind channel, Variant variant);

SweepResult run_sweep(const SweepConfig& cfg);

std::string points_csv_header(const std::vector<WitnessChoice>& w);
std::string points_csv(const SweepResult& r);
/// Inverse of points_csv for every numeric and categorical field.
std::vector<PointRecord> parse_points_csv(const std::string& text);
/// One row per point and witness.
std::string witness_csv(const SweepResult& r);
std::string budget_csv(const std::vector<BudgetPoint>& b, RateConvention c = RateConvention::Nominal);

/// Rectangular matrix (rows nbar, columns t_g) with "# cols tg_us ..." and "# rows nbar ..." header lines.
std::string heatmap_text(const std::vector<double>& tg_us, const std::vector<double>& nbar,
                         const std::vector<std::vector<double>>& grid, const std::string& title);

struct Polyline {
  std::vector<std::pair<double, double>> points;  // (tg_us, nbar)
};
/// Zero contour of `grid` (negative = conclusive) by marching squares, interpolated
/// in log coordinates on log axes. NaN cells are skipped.
std::vector<Polyline> boundary(const std::vector<double>& tg_us, const std::vector<double>& nbar,
                               const std::vector<std::vector<double>>& grid, bool log_tg, bool log_nbar);
std::string boundary_text(const std::vector<Polyline>& lines, const std::string& title);

/// Conclusive-cell counts per panel as a Markdown table.
std::string summary_markdown(const SweepResult& r);

/// Writes every artifact of a sweep into `dir`; returns the written paths.
std::vector<std::string> emit(const SweepResult& r, const std::string& dir);

/// Writes `text` to `path`, creating parent directories; throws naming the path on failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace lsgate

#endif
