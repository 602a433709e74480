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


#include "lsgate/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace lsgate {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Shortest text that reads back to the same double.
std::string fmt(double d) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, r.ptr);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_num(const std::string& s) {
  if (s == "nan" || s == "-nan") return kNaN;
  return std::stod(s);
}

std::string sanitize(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

const PointRecord& SweepResult::at(size_t channel, size_t variant, size_t it, size_t in) const {
  size_t nv = config.variants.size();
  return records.at(((channel * nv + variant) * tg_us.size() + it) * nbar.size() + in);
}

std::vector<std::vector<double>> SweepResult::witness_grid(size_t channel, size_t variant, size_t witness) const {
  std::vector<std::vector<double>> g(nbar.size(), std::vector<double>(tg_us.size(), kNaN));
  for (size_t it = 0; it < tg_us.size(); ++it)
    for (size_t in = 0; in < nbar.size(); ++in) {
      const auto& r = at(channel, variant, it, in);
      if (r.valid) g[in][it] = r.witnesses.at(witness).witness_value;
    }
  return g;
}

std::vector<std::vector<double>> SweepResult::fidelity_grid(size_t channel, size_t variant) const {
  std::vector<std::vector<double>> g(nbar.size(), std::vector<double>(tg_us.size(), kNaN));
  for (size_t it = 0; it < tg_us.size(); ++it)
    for (size_t in = 0; in < nbar.size(); ++in) {
      const auto& r = at(channel, variant, it, in);
      if (r.valid) g[in][it] = r.fidelity;
    }
  return g;
}

int SweepResult::conclusive_cells(size_t channel, size_t variant, size_t witness) const {
  int n = 0;
  for (size_t it = 0; it < tg_us.size(); ++it)
    for (size_t in = 0; in < nbar.size(); ++in) {
      const auto& r = at(channel, variant, it, in);
      n += r.valid && r.witnesses.at(witness).conclusive;
    }
  return n;
}

std::vector<BudgetPoint> run_budget_grid(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<BudgetPoint> out;
  for (double tg : cfg.tg_us.values())
    for (double nb : cfg.nbar.values()) {
      BudgetPoint b;
      b.tg_us = tg;
      b.nbar = nb;
      try {
        auto g = select_geometry(tg * 1e-6, cfg.trap);
        b.budget = total_error(cfg.trap, g, ThermalState::uniform(nb));
        b.valid = true;
      } catch (const std::exception& e) {
        b.error = e.what();
      }
      out.push_back(b);
    }
  return out;
}

PointRecord evaluate_point(const SweepConfig& cfg, double tg_us, double nbar, ChannelKind channel, Variant variant) {
  PointRecord r;
  r.tg_us = tg_us;
  r.nbar = nbar;
  r.channel = channel;
  r.variant = variant;
  try {
    GateGeometry g = select_geometry(tg_us * 1e-6, cfg.trap);
    Circuit c = build_parity_circuit(variant);
    size_t ngates = c.two_qubit_positions().size();
    BudgetSchedule s = budget_schedule(cfg.trap, g, ThermalState::uniform(nbar), ngates, cfg.heating,
                                       cfg.heating_rates, channel, cfg.convention);
    r.eps_first = s.budgets.front().eps_total;
    r.eps_last = s.budgets.back().eps_total;
    r.p_first = s.rates.front();
    r.p_last = s.rates.back();
    SimResult sim = simulate(c, NoisePlan{channel, s.rates, cfg.p_me});
    r.fidelity = state_fidelity(sim.state, c.target_state());
    r.kept_probability = sim.kept_probability;
    for (const auto& w : cfg.witnesses) {
      WitnessOutcome o;
      o.name = w.name();
      if (w.method == WitnessMethod::SL) {
        GeneratorLabel l = label_for(variant, w.biased);
        o.tag = label_name(l);
        WitnessResult wr = sl_witness(sim.state, generator_set(l), cfg.p_me);
        o.test_value = wr.test_value;
        o.witness_value = wr.witness_value;
        o.conclusive = wr.conclusive;
      } else {
        o.tag = "all";
        ClSummary cs = cl_all_bipartitions(sim.state, is_x_type(variant), cfg.p_me);
        o.conclusive = cs.conclusive;
        o.witness_value = cs.worst;
        o.test_value = 0.5 - cs.worst;
        o.conditioning_probability = 1;
        for (const auto& p : cs.parts) o.conditioning_probability = std::min(o.conditioning_probability, p.conditioning_probability);
      }
      r.witnesses.push_back(o);
    }
    r.valid = true;
  } catch (const std::exception& e) {
    r.valid = false;
    r.error = e.what();
    r.witnesses.clear();
    for (const auto& w : cfg.witnesses) r.witnesses.push_back(WitnessOutcome{w.name(), "", kNaN, kNaN, false, kNaN});
  }
  return r;
}

SweepResult run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  SweepResult res;
  res.config = cfg;
  res.tg_us = cfg.tg_us.values();
  res.nbar = cfg.nbar.values();
  struct Task {
    size_t c, v, t, n;
  };
  std::vector<Task> tasks;
  for (size_t c = 0; c < cfg.channels.size(); ++c)
    for (size_t v = 0; v < cfg.variants.size(); ++v)
      for (size_t t = 0; t < res.tg_us.size(); ++t)
        for (size_t n = 0; n < res.nbar.size(); ++n) tasks.push_back({c, v, t, n});
  res.records.resize(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < tasks.size(); k = next++) {
      const Task& tk = tasks[k];
      res.records[k] = evaluate_point(cfg, res.tg_us[tk.t], res.nbar[tk.n], cfg.channels[tk.c], cfg.variants[tk.v]);
    }
  };
  unsigned nt = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : std::max(1u, std::thread::hardware_concurrency());
  nt = std::min<unsigned>(nt, static_cast<unsigned>(std::max<size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < nt; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return res;
}

std::string points_csv_header(const std::vector<WitnessChoice>& w) {
  std::string h = "tg_us,nbar,channel,variant,valid,eps_first,eps_last,p_first,p_last,fidelity,kept_probability";
  for (const auto& c : w) {
    std::string n = c.name();
    h += "," + n + "_test," + n + "_value," + n + "_conclusive," + n + "_cond_prob";
  }
  return h + ",error";
}

std::string points_csv(const SweepResult& r) {
  std::ostringstream os;
  os << points_csv_header(r.config.witnesses) << "\n";
  for (const auto& p : r.records) {
    os << fmt(p.tg_us) << "," << fmt(p.nbar) << "," << channel_name(p.channel) << "," << variant_name(p.variant) << ","
       << (p.valid ? 1 : 0) << "," << fmt(p.eps_first) << "," << fmt(p.eps_last) << "," << fmt(p.p_first) << ","
       << fmt(p.p_last) << "," << fmt(p.fidelity) << "," << fmt(p.kept_probability);
    for (const auto& w : p.witnesses)
      os << "," << fmt(w.test_value) << "," << fmt(w.witness_value) << "," << (w.conclusive ? 1 : 0) << ","
         << fmt(w.conditioning_probability);
    os << "," << sanitize(p.error) << "\n";
  }
  return os.str();
}

std::vector<PointRecord> parse_points_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("empty points CSV");
  auto head = split(line, ',');
  if (head.size() < 12 || head[0] != "tg_us" || head.back() != "error")
    throw std::invalid_argument("not a points CSV header");
  size_t nw = (head.size() - 12) / 4;
  if (11 + 4 * nw + 1 != head.size()) throw std::invalid_argument("malformed points CSV header");
  std::vector<std::string> names;
  for (size_t k = 0; k < nw; ++k) {
    const std::string& h = head[11 + 4 * k];
    names.push_back(h.substr(0, h.size() - 5));  // strip "_test"
  }
  std::vector<PointRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto f = split(line, ',');
    if (f.size() != head.size()) throw std::invalid_argument("points CSV row has the wrong number of fields");
    PointRecord p;
    p.tg_us = parse_num(f[0]);
    p.nbar = parse_num(f[1]);
    p.channel = parse_channel(f[2]);
    p.variant = parse_variant(f[3]);
    p.valid = f[4] == "1";
    p.eps_first = parse_num(f[5]);
    p.eps_last = parse_num(f[6]);
    p.p_first = parse_num(f[7]);
    p.p_last = parse_num(f[8]);
    p.fidelity = parse_num(f[9]);
    p.kept_probability = parse_num(f[10]);
    for (size_t k = 0; k < nw; ++k) {
      WitnessOutcome w;
      w.name = names[k];
      w.test_value = parse_num(f[11 + 4 * k]);
      w.witness_value = parse_num(f[12 + 4 * k]);
      w.conclusive = f[13 + 4 * k] == "1";
      w.conditioning_probability = parse_num(f[14 + 4 * k]);
      p.witnesses.push_back(w);
    }
    p.error = f.back();
    out.push_back(p);
  }
  return out;
}

std::string witness_csv(const SweepResult& r) {
  std::ostringstream os;
  os << "method,label,tg_us,nbar,channel,variant,test_value,witness_value,conclusive,conditioning_probability\n";
  for (const auto& p : r.records) {
    if (!p.valid) continue;
    for (const auto& w : p.witnesses)
      os << (w.name == "CL" ? "CL" : "SL") << "," << w.tag << "," << fmt(p.tg_us) << "," << fmt(p.nbar) << ","
         << channel_name(p.channel) << "," << variant_name(p.variant) << "," << fmt(w.test_value) << ","
         << fmt(w.witness_value) << "," << (w.conclusive ? 1 : 0) << "," << fmt(w.conditioning_probability) << "\n";
  }
  return os.str();
}

std::string budget_csv(const std::vector<BudgetPoint>& b, RateConvention c) {
  std::ostringstream os;
  os << ErrorBudget::csv_header() << "\n";
  for (const auto& p : b) {
    if (p.valid) {
      os << p.budget.csv_row(p.tg_us, p.nbar, c) << "\n";
    } else {
      os << fmt(p.tg_us) << "," << fmt(p.nbar);
      for (int k = 0; k < 9; ++k) os << ",nan";
      os << "\n";
    }
  }
  return os.str();
}

std::string heatmap_text(const std::vector<double>& tg_us, const std::vector<double>& nbar,
                         const std::vector<std::vector<double>>& grid, const std::string& title) {
  std::ostringstream os;
  os << "# " << title << "\n# cols tg_us";
  for (double t : tg_us) os << " " << fmt(t);
  os << "\n# rows nbar";
  for (double n : nbar) os << " " << fmt(n);
  os << "\n";
  for (const auto& row : grid) {
    for (size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << (std::isnan(row[k]) ? "nan" : fmt(row[k]));
    os << "\n";
  }
  return os.str();
}

std::vector<Polyline> boundary(const std::vector<double>& tg_us, const std::vector<double>& nbar,
                               const std::vector<std::vector<double>>& grid, bool log_tg, bool log_nbar) {
  const size_t ny = nbar.size(), nx = tg_us.size();
  std::vector<Polyline> out;
  if (nx < 2 || ny < 2) return out;
  auto cx = [&](size_t j) { return log_tg ? std::log10(tg_us[j]) : tg_us[j]; };
  auto cy = [&](size_t i) { return log_nbar ? std::log10(nbar[i]) : nbar[i]; };
  auto inside = [&](size_t i, size_t j) { return grid[i][j] < 0; };
  const size_t nh = ny * (nx - 1);
  auto hid = [&](size_t i, size_t j) { return i * (nx - 1) + j; };       // (i,j)-(i,j+1)
  auto vid = [&](size_t i, size_t j) { return nh + i * nx + j; };        // (i,j)-(i+1,j)
  std::map<size_t, std::pair<double, double>> pt;
  auto crossing = [&](size_t id, size_t i0, size_t j0, size_t i1, size_t j1) {
    if (pt.count(id)) return;
    double v0 = grid[i0][j0], v1 = grid[i1][j1];
    double t = v0 / (v0 - v1);
    double x = cx(j0) + t * (cx(j1) - cx(j0)), y = cy(i0) + t * (cy(i1) - cy(i0));
    pt[id] = {log_tg ? std::pow(10.0, x) : x, log_nbar ? std::pow(10.0, y) : y};
  };
  std::vector<std::pair<size_t, size_t>> segs;
  for (size_t i = 0; i + 1 < ny; ++i)
    for (size_t j = 0; j + 1 < nx; ++j) {
      double a = grid[i][j], b = grid[i][j + 1], c = grid[i + 1][j + 1], d = grid[i + 1][j];
      if (std::isnan(a) || std::isnan(b) || std::isnan(c) || std::isnan(d)) continue;
      bool ia = inside(i, j), ib = inside(i, j + 1), ic = inside(i + 1, j + 1), id = inside(i + 1, j);
      std::vector<size_t> e;
      size_t bottom = hid(i, j), right = vid(i, j + 1), top = hid(i + 1, j), left = vid(i, j);
      if (ia != ib) { crossing(bottom, i, j, i, j + 1); e.push_back(bottom); }
      if (ib != ic) { crossing(right, i, j + 1, i + 1, j + 1); e.push_back(right); }
      if (id != ic) { crossing(top, i + 1, j, i + 1, j + 1); e.push_back(top); }
      if (ia != id) { crossing(left, i, j, i + 1, j); e.push_back(left); }
      if (e.size() == 2) {
        segs.push_back({e[0], e[1]});
      } else if (e.size() == 4) {
        bool center = (a + b + c + d) / 4 < 0;
        if (center == ia) {
          segs.push_back({bottom, right});
          segs.push_back({top, left});
        } else {
          segs.push_back({bottom, left});
          segs.push_back({right, top});
        }
      }
    }
  std::map<size_t, std::vector<size_t>> adj;
  for (size_t s = 0; s < segs.size(); ++s) {
    adj[segs[s].first].push_back(s);
    adj[segs[s].second].push_back(s);
  }
  std::vector<bool> used(segs.size(), false);
  auto walk = [&](size_t start_edge) {
    Polyline pl;
    size_t edge = start_edge;
    pl.points.push_back(pt[edge]);
    for (;;) {
      size_t next_seg = segs.size();
      for (size_t s : adj[edge])
        if (!used[s]) {
          next_seg = s;
          break;
        }
      if (next_seg == segs.size()) break;
      used[next_seg] = true;
      edge = segs[next_seg].first == edge ? segs[next_seg].second : segs[next_seg].first;
      pl.points.push_back(pt[edge]);
    }
    out.push_back(pl);
  };
  for (const auto& [edge, list] : adj)
    if (list.size() == 1 && !used[list[0]]) walk(edge);
  for (size_t s = 0; s < segs.size(); ++s)
    if (!used[s]) walk(segs[s].first);
  return out;
}

std::string boundary_text(const std::vector<Polyline>& lines, const std::string& title) {
  std::ostringstream os;
  os << "# " << title << "\n# tg_us nbar (polylines separated by blank lines)\n";
  for (size_t k = 0; k < lines.size(); ++k) {
    if (k) os << "\n";
    for (const auto& [x, y] : lines[k].points) os << fmt(x) << " " << fmt(y) << "\n";
  }
  return os.str();
}

std::string summary_markdown(const SweepResult& r) {
  std::ostringstream os;
  os << "| channel | variant | witness | conclusive cells | valid cells |\n|---|---|---|---|---|\n";
  for (size_t c = 0; c < r.config.channels.size(); ++c)
    for (size_t v = 0; v < r.config.variants.size(); ++v) {
      int valid = 0;
      for (size_t t = 0; t < r.tg_us.size(); ++t)
        for (size_t n = 0; n < r.nbar.size(); ++n) valid += r.at(c, v, t, n).valid;
      for (size_t w = 0; w < r.config.witnesses.size(); ++w)
        os << "| " << channel_name(r.config.channels[c]) << " | " << variant_name(r.config.variants[v]) << " | "
           << r.config.witnesses[w].name() << " | " << r.conclusive_cells(c, v, w) << " | " << valid << " |\n";
    }
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path(), ec);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
  f.close();
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
}

std::vector<std::string> emit(const SweepResult& r, const std::string& dir) {
  if (r.records.empty()) throw std::invalid_argument("nothing to emit: empty sweep");
  std::vector<std::string> written;
  auto put = [&](const std::string& name, const std::string& text) {
    std::string path = (std::filesystem::path(dir) / name).string();
    write_file(path, text);
    written.push_back(path);
  };
  put("points.csv", points_csv(r));
  put("witness.csv", witness_csv(r));
  put("summary.md", summary_markdown(r));
  put("config_used.cfg", r.config.to_text());
  const auto& cfg = r.config;
  auto log_axis = [](const GridAxis& a, const std::vector<double>& v) {
    return (a.explicit_values.empty() ? a.log : true) && !v.empty() && v.front() > 0;
  };
  bool log_tg = log_axis(cfg.tg_us, r.tg_us), log_nb = log_axis(cfg.nbar, r.nbar);
  for (size_t c = 0; c < cfg.channels.size(); ++c)
    for (size_t v = 0; v < cfg.variants.size(); ++v) {
      std::string panel = variant_name(cfg.variants[v]) + "_" + channel_name(cfg.channels[c]);
      put("fidelity_" + panel + ".txt",
          heatmap_text(r.tg_us, r.nbar, r.fidelity_grid(c, v), "state fidelity " + panel));
      for (size_t w = 0; w < cfg.witnesses.size(); ++w) {
        std::string name = panel + "_" + cfg.witnesses[w].name();
        auto grid = r.witness_grid(c, v, w);
        put("heatmap_" + name + ".txt", heatmap_text(r.tg_us, r.nbar, grid, "witness value " + name));
        put("boundary_" + name + ".txt",
            boundary_text(boundary(r.tg_us, r.nbar, grid, log_tg, log_nb), "conclusive-region boundary " + name));
      }
    }
  return written;
}

}  // namespace lsgate
