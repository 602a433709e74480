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


// lsgate: error budgets, noisy parity-check circuits, GME witnesses and sweeps.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

#include "lsgate/audit.hpp"
#include "lsgate/config.hpp"
#include "lsgate/sweep.hpp"

using namespace lsgate;

namespace {

struct Common {
  std::string config;
  std::string tg_us, nbar, channel, variant, witness, out;
  std::optional<double> pme;
  std::optional<int> threads;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "flat key = value config file")->check(CLI::ExistingFile);
  sub->add_option("--tg-us", c.tg_us, "gate time(s) in us, comma separated");
  sub->add_option("--nbar", c.nbar, "initial mean phonon number(s), comma separated");
  sub->add_option("--channel", c.channel, "depolarizing, dephasing (comma separated)");
  sub->add_option("--variant", c.variant, "X_NONFT, Z_NONFT, X_FT, Z_FT (comma separated)");
  sub->add_option("--witness", c.witness, "SL_NN, SL_Z5, CL (comma separated)");
  sub->add_option("--pme", c.pme, "measurement flip probability");
  sub->add_option("--threads", c.threads, "worker threads (0 = all cores)");
  sub->add_option("--out", c.out, "output directory");
}

SweepConfig resolve(const Common& c) {
  SweepConfig cfg = c.config.empty() ? SweepConfig{} : load_config(c.config);
  if (!c.tg_us.empty()) apply_setting(cfg, "tg_values_us", c.tg_us);
  if (!c.nbar.empty()) apply_setting(cfg, "nbar_values", c.nbar);
  if (!c.channel.empty()) apply_setting(cfg, "channels", c.channel);
  if (!c.variant.empty()) apply_setting(cfg, "variants", c.variant);
  if (!c.witness.empty()) apply_setting(cfg, "witnesses", c.witness);
  if (c.pme) cfg.p_me = *c.pme;
  if (c.threads) cfg.threads = *c.threads;
  if (!c.out.empty()) cfg.out = c.out;
  cfg.validate();
  return cfg;
}

std::string path_in(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

int cmd_budget(const SweepConfig& cfg) {
  auto pts = run_budget_grid(cfg);
  std::string path = path_in(cfg.out, "budget.csv");
  write_file(path, budget_csv(pts, cfg.convention));
  double lo = 1e300, hi = -1e300;
  int bad = 0;
  for (const auto& p : pts) {
    if (!p.valid) {
      ++bad;
      continue;
    }
    lo = std::min(lo, p.budget.eps_total);
    hi = std::max(hi, p.budget.eps_total);
  }
  std::printf("wrote %s (%zu points, %d without a geometry)\n", path.c_str(), pts.size(), bad);
  if (bad < static_cast<int>(pts.size())) std::printf("eps_total range [%.4g, %.4g]\n", lo, hi);
  return 0;
}

int cmd_simulate(const SweepConfig& cfg, const std::string& circuit_out) {
  SweepResult r = run_sweep(cfg);
  std::string path = path_in(cfg.out, "points.csv");
  write_file(path, points_csv(r));
  for (const auto& p : r.records) {
    if (p.valid)
      std::printf("%-8s %-12s tg=%-8g nbar=%-8g p=[%.4g..%.4g] fidelity=%.6f kept=%.6f\n", variant_name(p.variant).c_str(),
                  channel_name(p.channel).c_str(), p.tg_us, p.nbar, p.p_first, p.p_last, p.fidelity, p.kept_probability);
    else
      std::printf("%-8s %-12s tg=%-8g nbar=%-8g invalid: %s\n", variant_name(p.variant).c_str(),
                  channel_name(p.channel).c_str(), p.tg_us, p.nbar, p.error.c_str());
  }
  if (!circuit_out.empty())
    for (Variant v : cfg.variants) {
      std::string cp = path_in(circuit_out, "circuit_" + variant_name(v) + ".txt");
      write_file(cp, build_parity_circuit(v).to_text());
      std::printf("wrote %s\n", cp.c_str());
    }
  std::printf("wrote %s\n", path.c_str());
  return 0;
}

int cmd_witness(const SweepConfig& cfg) {
  SweepResult r = run_sweep(cfg);
  std::string path = path_in(cfg.out, "witness.csv");
  write_file(path, witness_csv(r));
  for (const auto& p : r.records) {
    if (!p.valid) {
      std::printf("%s %s tg=%g nbar=%g invalid: %s\n", variant_name(p.variant).c_str(), channel_name(p.channel).c_str(),
                  p.tg_us, p.nbar, p.error.c_str());
      continue;
    }
    for (const auto& w : p.witnesses)
      std::printf("%-8s %-12s tg=%-8g nbar=%-8g %-5s <L>=%+.6f W=%+.6f %s\n", variant_name(p.variant).c_str(),
                  channel_name(p.channel).c_str(), p.tg_us, p.nbar, w.name.c_str(), w.test_value, w.witness_value,
                  w.conclusive ? "conclusive" : "inconclusive");
  }
  std::printf("wrote %s\n", path.c_str());
  return 0;
}

int cmd_tables(const SweepConfig& cfg) {
  std::string all;
  for (Variant v : cfg.variants)
    for (ChannelKind k : cfg.channels)
      for (bool biased : {false, true}) {
        AuditTable t = generate_table(v, k, label_for(v, biased));
        std::string stem = "table_" + variant_name(v) + "_" + channel_name(k) + "_" + label_name(t.label);
        write_file(path_in(cfg.out, stem + ".csv"), t.to_csv());
        std::string md = t.to_markdown();
        write_file(path_in(cfg.out, stem + ".md"), md);
        all += md + "\n";
      }
  write_file(path_in(cfg.out, "tables.md"), all);
  std::printf("wrote %s\n", path_in(cfg.out, "tables.md").c_str());
  return 0;
}

int cmd_sweep(const SweepConfig& cfg) {
  SweepResult r = run_sweep(cfg);
  auto files = emit(r, cfg.out);
  write_file(path_in(cfg.out, "budget.csv"), budget_csv(run_budget_grid(cfg), cfg.convention));
  std::printf("%s", summary_markdown(r).c_str());
  std::printf("wrote %zu files to %s\n", files.size() + 1, cfg.out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lsgate: light-shift gate error budgets, parity-check circuits and GME witnesses"};
  app.require_subcommand(1);
  Common budget, simulate, witness, tables, sweep;
  std::string circuit_out;
  auto* b = app.add_subcommand("budget", "microscopic error budget over the (t_g, nbar) grid");
  add_common(b, budget);
  auto* s = app.add_subcommand("simulate", "noisy circuit simulation, state fidelity");
  add_common(s, simulate);
  s->add_option("--circuit-out", circuit_out, "also write the gate lists to this directory");
  auto* w = app.add_subcommand("witness", "SL and CL witness values");
  add_common(w, witness);
  auto* t = app.add_subcommand("tables", "single-fault propagation tables (Markdown and CSV)");
  add_common(t, tables);
  auto* sw = app.add_subcommand("sweep", "full grid sweep with heat maps and boundaries");
  add_common(sw, sweep);
  CLI11_PARSE(app, argc, argv);
  try {
    if (b->parsed()) return cmd_budget(resolve(budget));
    if (s->parsed()) return cmd_simulate(resolve(simulate), circuit_out);
    if (w->parsed()) return cmd_witness(resolve(witness));
    if (t->parsed()) return cmd_tables(resolve(tables));
    if (sw->parsed()) return cmd_sweep(resolve(sweep));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
