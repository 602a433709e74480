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


#ifndef LSGATE_CONFIG_HPP
#define LSGATE_CONFIG_HPP

#include <string>
#include <vector>

#include "lsgate/channels.hpp"
#include "lsgate/circuit.hpp"
#include "lsgate/error_budget.hpp"
#include "lsgate/gate_design.hpp"
#include "lsgate/witness.hpp"

namespace lsgate {

struct GridAxis {
  double min = 1, max = 1;
  int points = 1;
  bool log = true;
  std::vector<double> explicit_values;  // overrides min/max/points when nonempty

  std::vector<double> values() const;
  void validate(const std::string& name) const;
};

/// A witness column of a sweep. SL uses the nearest-neighbour or the
/// syndrome-biased generators matching each circuit's output state.
struct WitnessChoice {
  WitnessMethod method = WitnessMethod::SL;
  bool biased = false;

  /// "SL_NN", "SL_Z5" or "CL".
  std::string name() const;
  static WitnessChoice parse(std::string_view s);
  bool operator==(const WitnessChoice&) const = default;
};

struct SweepConfig {
  TrapLaserConfig trap = TrapLaserConfig::defaults();
  double omega_l_frac = 0.1;  // dipole Rabi frequency as a fraction of omega_x,com
  GridAxis tg_us{10, 100, 16, true, {}};
  GridAxis nbar{0.01, 10, 16, true, {}};
  std::vector<ChannelKind> channels{ChannelKind::Depolarizing, ChannelKind::Dephasing};
  std::vector<Variant> variants{Variant::X_NONFT, Variant::X_FT};
  std::vector<WitnessChoice> witnesses{{WitnessMethod::SL, false}, {WitnessMethod::SL, true}, {WitnessMethod::CL, false}};
  double p_me = 0;
  bool heating = true;
  HeatingRates heating_rates;
  RateConvention convention = RateConvention::Nominal;
  int threads = 0;  // 0 = hardware concurrency
  std::string out = "out";

  void validate() const;
  /// Flat key = value text accepted by parse_config.
  std::string to_text() const;
};

/// Applies one `key = value` setting; throws std::invalid_argument on unknown keys or bad values.
void apply_setting(SweepConfig& cfg, const std::string& key, const std::string& value);

SweepConfig parse_config(const std::string& text);
SweepConfig load_config(const std::string& path);

std::vector<std::string> split_list(const std::string& s);

}  // namespace lsgate

#endif
