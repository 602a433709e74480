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


#include "lsgate/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lsgate {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
  size_t used = 0;
  double d = 0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number for '" + key + "': '" + v + "'");
  }
  if (used != v.size()) throw std::invalid_argument("bad number for '" + key + "': '" + v + "'");
  return d;
}

int to_int(const std::string& key, const std::string& v) {
  double d = to_double(key, v);
  if (d != std::floor(d)) throw std::invalid_argument("'" + key + "' must be an integer");
  return static_cast<int>(d);
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "off" || v == "no") return false;
  throw std::invalid_argument("bad boolean for '" + key + "': '" + v + "'");
}

bool to_scale(const std::string& key, const std::string& v) {
  if (v == "log") return true;
  if (v == "linear" || v == "lin") return false;
  throw std::invalid_argument("'" + key + "' must be log or linear");
}

// Shortest text that reads back to the same double.
std::string fmt(double d) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, r.ptr);
}

std::string join_doubles(const std::vector<double>& v) {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + fmt(v[k]);
  return s;
}

}  // namespace

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> GridAxis::values() const {
  if (!explicit_values.empty()) return explicit_values;
  std::vector<double> v;
  if (points == 1) return {min};
  for (int k = 0; k < points; ++k) {
    double f = static_cast<double>(k) / (points - 1);
    v.push_back(log ? std::pow(10.0, std::log10(min) + f * (std::log10(max) - std::log10(min))) : min + (max - min) * f);
  }
  v.back() = max;
  return v;
}

void GridAxis::validate(const std::string& name) const {
  if (!explicit_values.empty()) {
    for (double x : explicit_values)
      if (!std::isfinite(x) || (log && x <= 0)) throw std::invalid_argument(name + " values must be finite (and > 0 on a log axis)");
    if (!std::is_sorted(explicit_values.begin(), explicit_values.end()))
      throw std::invalid_argument(name + " values must be ascending");
    return;
  }
  if (points < 1) throw std::invalid_argument(name + " needs at least one point");
  if (!(max >= min)) throw std::invalid_argument(name + " range is empty");
  if (log && !(min > 0)) throw std::invalid_argument(name + " log axis needs a positive minimum");
}

std::string WitnessChoice::name() const {
  if (method == WitnessMethod::CL) return "CL";
  return biased ? "SL_Z5" : "SL_NN";
}

WitnessChoice WitnessChoice::parse(std::string_view s) {
  if (s == "SL_NN" || s == "SL" || s == "NN") return {WitnessMethod::SL, false};
  if (s == "SL_Z5" || s == "Z5") return {WitnessMethod::SL, true};
  if (s == "CL") return {WitnessMethod::CL, false};
  throw std::invalid_argument("unknown witness '" + std::string(s) + "' (SL_NN, SL_Z5 or CL)");
}

void SweepConfig::validate() const {
  trap.validate();
  tg_us.validate("tg_us");
  nbar.validate("nbar");
  for (double n : nbar.values())
    if (n < 0) throw std::invalid_argument("nbar must be >= 0");
  for (double t : tg_us.values())
    if (!(t > 0)) throw std::invalid_argument("tg_us must be > 0");
  if (channels.empty() || variants.empty()) throw std::invalid_argument("need at least one channel and one variant");
  if (!(p_me >= 0 && p_me <= 0.5)) throw std::invalid_argument("p_me must lie in [0, 1/2]");
  if (threads < 0) throw std::invalid_argument("threads must be >= 0");
}

void apply_setting(SweepConfig& c, const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  auto& t = c.trap;
  auto hz = [&] { return kTwoPi * to_double(key, v); };
  static const char* axes[3] = {"x", "y", "z"};
  static const char* modes[2] = {"com", "zz"};
  for (int a = 0; a < 3; ++a)
    for (int m = 0; m < 2; ++m)
      if (key == std::string("omega_") + axes[a] + "_" + modes[m] + "_hz") {
        t.omega[a][m] = hz();
        t.omega_l = c.omega_l_frac * t.omega[AX_X][MODE_COM];
        return;
      }
  if (key == "omega_l_frac") {
    c.omega_l_frac = to_double(key, v);
    t.omega_l = c.omega_l_frac * t.omega[AX_X][MODE_COM];
  } else if (key == "delta_k_per_m") t.delta_k = to_double(key, v);
  else if (key == "misalign_theta_rad") t.misalign_theta = to_double(key, v);
  else if (key == "misalign_chi_rad") t.misalign_chi = to_double(key, v);
  else if (key == "ion_mass_amu") t.ion_mass = to_double(key, v) * kAmu;
  else if (key == "detuning_hz") t.detuning = hz();
  else if (key == "linewidth_hz") t.linewidth = hz();
  else if (key == "t2_s") t.t2 = to_double(key, v);
  else if (key == "correlated_dephasing") t.correlated_dephasing = to_bool(key, v);
  else if (key == "offres_rabi") {
    if (v == "fixed") t.offres_rabi = OffResonantRabi::Fixed;
    else if (v == "solved") t.offres_rabi = OffResonantRabi::Solved;
    else throw std::invalid_argument("offres_rabi must be fixed or solved");
  } else if (key == "rabi_cap_hz") t.rabi_cap = hz();
  else if (key == "geometry_min_fraction") t.geometry_min_fraction = to_double(key, v);
  else if (key == "ladder_max_denominator") t.ladder_max_denominator = to_int(key, v);
  else if (key == "tg_min_us") c.tg_us.min = to_double(key, v);
  else if (key == "tg_max_us") c.tg_us.max = to_double(key, v);
  else if (key == "tg_points") c.tg_us.points = to_int(key, v);
  else if (key == "tg_scale") c.tg_us.log = to_scale(key, v);
  else if (key == "tg_values_us") {
    c.tg_us.explicit_values.clear();
    for (const auto& s : split_list(v)) c.tg_us.explicit_values.push_back(to_double(key, s));
  } else if (key == "nbar_min") c.nbar.min = to_double(key, v);
  else if (key == "nbar_max") c.nbar.max = to_double(key, v);
  else if (key == "nbar_points") c.nbar.points = to_int(key, v);
  else if (key == "nbar_scale") c.nbar.log = to_scale(key, v);
  else if (key == "nbar_values") {
    c.nbar.explicit_values.clear();
    for (const auto& s : split_list(v)) c.nbar.explicit_values.push_back(to_double(key, s));
  } else if (key == "channels") {
    c.channels.clear();
    for (const auto& s : split_list(v)) c.channels.push_back(parse_channel(s));
  } else if (key == "variants") {
    c.variants.clear();
    for (const auto& s : split_list(v)) c.variants.push_back(parse_variant(s));
  } else if (key == "witnesses") {
    c.witnesses.clear();
    for (const auto& s : split_list(v)) c.witnesses.push_back(WitnessChoice::parse(s));
  } else if (key == "p_me") c.p_me = to_double(key, v);
  else if (key == "heating") c.heating = to_bool(key, v);
  else if (key == "heating_axial") c.heating_rates.axial = to_double(key, v);
  else if (key == "heating_radial") c.heating_rates.radial = to_double(key, v);
  else if (key == "rate_convention") {
    if (v == "nominal") c.convention = RateConvention::Nominal;
    else if (v == "exact") c.convention = RateConvention::Exact;
    else throw std::invalid_argument("rate_convention must be nominal or exact");
  } else if (key == "threads") c.threads = to_int(key, v);
  else if (key == "out") c.out = v;
  else throw std::invalid_argument("unknown config key '" + key + "'");
}

SweepConfig parse_config(const std::string& text) {
  SweepConfig c;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    try {
      apply_setting(c, trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  c.validate();
  return c;
}

SweepConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string SweepConfig::to_text() const {
  std::ostringstream os;
  const auto& t = trap;
  static const char* axes[3] = {"x", "y", "z"};
  static const char* modes[2] = {"com", "zz"};
  for (int a = 0; a < 3; ++a)
    for (int m = 0; m < 2; ++m)
      os << "omega_" << axes[a] << "_" << modes[m] << "_hz = " << fmt(t.omega[a][m] / kTwoPi) << "\n";
  os << "omega_l_frac = " << fmt(omega_l_frac) << "\n";
  os << "delta_k_per_m = " << fmt(t.delta_k) << "\n";
  os << "misalign_theta_rad = " << fmt(t.misalign_theta) << "\n";
  os << "misalign_chi_rad = " << fmt(t.misalign_chi) << "\n";
  os << "ion_mass_amu = " << fmt(t.ion_mass / kAmu) << "\n";
  os << "detuning_hz = " << fmt(t.detuning / kTwoPi) << "\n";
  os << "linewidth_hz = " << fmt(t.linewidth / kTwoPi) << "\n";
  os << "t2_s = " << fmt(t.t2) << "\n";
  os << "correlated_dephasing = " << (t.correlated_dephasing ? "true" : "false") << "\n";
  os << "offres_rabi = " << (t.offres_rabi == OffResonantRabi::Fixed ? "fixed" : "solved") << "\n";
  os << "rabi_cap_hz = " << fmt(t.rabi_cap / kTwoPi) << "\n";
  os << "geometry_min_fraction = " << fmt(t.geometry_min_fraction) << "\n";
  os << "ladder_max_denominator = " << t.ladder_max_denominator << "\n";
  if (tg_us.explicit_values.empty())
    os << "tg_min_us = " << fmt(tg_us.min) << "\ntg_max_us = " << fmt(tg_us.max) << "\ntg_points = " << tg_us.points
       << "\ntg_scale = " << (tg_us.log ? "log" : "linear") << "\n";
  else
    os << "tg_values_us = " << join_doubles(tg_us.explicit_values) << "\n";
  if (nbar.explicit_values.empty())
    os << "nbar_min = " << fmt(nbar.min) << "\nnbar_max = " << fmt(nbar.max) << "\nnbar_points = " << nbar.points
       << "\nnbar_scale = " << (nbar.log ? "log" : "linear") << "\n";
  else
    os << "nbar_values = " << join_doubles(nbar.explicit_values) << "\n";
  os << "channels = ";
  for (size_t k = 0; k < channels.size(); ++k) os << (k ? "," : "") << channel_name(channels[k]);
  os << "\nvariants = ";
  for (size_t k = 0; k < variants.size(); ++k) os << (k ? "," : "") << variant_name(variants[k]);
  os << "\nwitnesses = ";
  for (size_t k = 0; k < witnesses.size(); ++k) os << (k ? "," : "") << witnesses[k].name();
  os << "\np_me = " << fmt(p_me) << "\n";
  os << "heating = " << (heating ? "true" : "false") << "\n";
  os << "heating_axial = " << fmt(heating_rates.axial) << "\n";
  os << "heating_radial = " << fmt(heating_rates.radial) << "\n";
  os << "rate_convention = " << (convention == RateConvention::Nominal ? "nominal" : "exact") << "\n";
  os << "threads = " << threads << "\n";
  os << "out = " << out << "\n";
  return os.str();
}

}  // namespace lsgate
