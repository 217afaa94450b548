// Copyright 2026 The decohere Authors
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

#ifndef DECOHERE_SCENARIO_HPP
#define DECOHERE_SCENARIO_HPP

// Scenario configuration and the CSV-producing runs behind the CLI.
//
// Configuration is a flat `key = value` text file; `#` starts a comment.
// Keys (defaults in brackets):
//
//   regime          uncorrelated | partial | full            [partial]
//   alpha                                                     [7.2973525693e-3]
//   omega_uv, omega_ir                                        [1, 0.01]
//   chi             m₀c²/(ħϖ), 0 disables the kinetic phase   [0]
//   mass_ratio      m/m₀                                      [1]
//   mass_cutoff     exponential | step                        [exponential]
//   dressing        series | log                              [series]
//   packet.center, packet.width, packet.n, packet.span        [0, 0.01, 2, 1]
//   packet.u        explicit momenta, comma separated (overrides the Gaussian)
//   packet.c_re, packet.c_im   explicit amplitudes, normalized on load
//   tau.min, tau.max, tau.points, tau.scale (log | linear)    [1e-3, 1e3, 61, log]
//   outputs         evolve/sweep columns after tau            [abs_rho_12, ...]
//   figure1.q       Q values for figure1                      [0.1, 0.5, 1, 5]
//   sweep.q         Q values for sweep                        [0.1, 0.5, 1, 5]
//
// Numbers are written with 17 significant digits in scientific notation so
// identical configurations produce identical bytes.

#include <string>
#include <string_view>
#include <vector>

#include "decohere/decoherence.hpp"
#include "decohere/density.hpp"
#include "decohere/model.hpp"

namespace decohere {

enum class TauScale { Log, Linear };

struct TauGrid {
  double min = 1e-3;
  double max = 1e3;
  int points = 61;
  TauScale scale = TauScale::Log;

  std::vector<double> values() const;
};

struct PacketSpec {
  double center = 0.0;
  double width = 0.01;
  int n = 2;
  double span = 1.0;
  std::vector<double> momenta;       // explicit packet when non-empty
  std::vector<double> amplitude_re;
  std::vector<double> amplitude_im;

  WavePacket build() const;
};

struct ScenarioConfig {
  Regime regime = Regime::PartiallyCorrelated;
  PhysicalParams params;
  DressingMode dressing = DressingMode::Series;
  PacketSpec packet;
  TauGrid tau;
  std::vector<std::string> outputs{"abs_rho_12", "arg_rho_12", "gamma_vac",
                                   "gamma_i",    "purity",     "coherence_l1"};
  std::vector<double> figure1_q{0.1, 0.5, 1.0, 5.0};
  std::vector<double> sweep_q{0.1, 0.5, 1.0, 5.0};

  /// Throws ConfigError naming the offending key.
  void validate() const;
};

/// Every column `outputs` may name.
const std::vector<std::string>& known_output_columns();

/// Apply one `key = value` setting. Throws ConfigError for unknown keys or
/// unparsable values; cross-field checks happen in validate().
void apply_setting(ScenarioConfig& config, std::string_view key, std::string_view value);

/// Parse configuration text on top of `base`.
ScenarioConfig parse_config(std::string_view text, ScenarioConfig base = {});
ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base = {});

struct RunOutput {
  std::string csv;
  std::vector<std::string> warnings;
  /// Only `validate` can report false.
  bool passed = true;
};

/// Fixed-width scientific formatting with 17 significant digits.
std::string format_number(double x);

/// tau, then the requested columns for element (1, 2) and the whole ρ.
RunOutput run_evolve(const ScenarioConfig& config);
/// tau, then abs_gamma_vac_Q<value> per figure1.q.
RunOutput run_figure1(const ScenarioConfig& config);
/// q, tau, then the evolve columns for a two-point packet whose separation
/// gives each requested Q.
RunOutput run_sweep(const ScenarioConfig& config);
/// Oracle-equivalence suite: check, points, max_error, tolerance, status.
RunOutput run_validate(const ScenarioConfig& config);

}  // namespace decohere

#endif  // DECOHERE_SCENARIO_HPP
