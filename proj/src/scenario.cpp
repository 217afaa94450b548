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

#include "decohere/scenario.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>

#include "decohere/error.hpp"

namespace decohere {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> items;
  while (true) {
    const auto comma = s.find(',');
    items.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return items;
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigError(std::string(key), "expected a number, got '" + std::string(text) + "'");
  if (!std::isfinite(value)) throw ConfigError(std::string(key), "value must be finite");
  return value;
}

int parse_int(std::string_view key, std::string_view text) {
  text = trim(text);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigError(std::string(key), "expected an integer, got '" + std::string(text) + "'");
  return value;
}

std::vector<double> parse_doubles(std::string_view key, std::string_view text) {
  std::vector<double> values;
  for (std::string_view item : split_list(text)) values.push_back(parse_double(key, item));
  return values;
}

[[noreturn]] void bad_choice(std::string_view key, std::string_view value, const char* choices) {
  throw ConfigError(std::string(key),
                    "unknown value '" + std::string(value) + "' (expected " + choices + ")");
}

bool needs_pair(const std::vector<std::string>& outputs) {
  return std::any_of(outputs.begin(), outputs.end(), [](const std::string& c) {
    return c.find("rho_12") != std::string::npos || c.rfind("gamma_", 0) == 0;
  });
}

void require_config(bool ok, const char* field, const char* what) {
  if (!ok) throw ConfigError(field, what);
}

// Config-level domain failures are reported as ConfigError with the field.
template <typename F>
auto as_config_error(const char* field, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw ConfigError(field, e.what());
  }
}

std::string format_header_number(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return ec == std::errc{} ? std::string(buf.data(), ptr) : std::string("nan");
}

void append_row(std::string& out, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += format_number(values[i]);
  }
  out += '\n';
}

void append_header(std::string& out, const std::vector<std::string>& columns) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) out += ',';
    out += columns[i];
  }
  out += '\n';
}

void collect_warnings(const WavePacket& packet, std::vector<std::string>& warnings) {
  for (double u : packet.momenta()) {
    if (auto w = nonrelativistic_warning(u)) {
      warnings.push_back(*w);
      return;
    }
  }
}

// Rows of the evolve schema for one packet, each optionally prefixed.
std::string evolve_rows(const ScenarioConfig& config, const WavePacket& packet,
                        const std::vector<double>& taus, const std::vector<double>& prefix) {
  const EvolveOptions options{config.dressing};
  const bool has_pair = packet.size() >= 2;
  const MomentumPair pair = has_pair ? MomentumPair{packet.momenta()[0], packet.momenta()[1]}
                                     : MomentumPair{};
  std::string out;
  std::vector<double> row;
  for (double tau : taus) {
    const ReducedDensityMatrix rho = evolve(packet, config.params, config.regime, tau, options);
    DecoherenceValue g;
    if (has_pair) g = element_decoherence(pair, config.params, config.regime, tau, options);
    row.assign(prefix.begin(), prefix.end());
    row.push_back(tau);
    for (const std::string& column : config.outputs) {
      if (column == "abs_rho_12") {
        row.push_back(std::abs(rho(0, 1)));
      } else if (column == "arg_rho_12") {
        row.push_back(std::arg(rho(0, 1)));
      } else if (column == "re_rho_12") {
        row.push_back(rho(0, 1).real());
      } else if (column == "im_rho_12") {
        row.push_back(rho(0, 1).imag());
      } else if (column == "gamma_vac") {
        row.push_back(g.gamma_real);
      } else if (column == "gamma_i") {
        row.push_back(g.gamma_imag);
      } else if (column == "purity") {
        row.push_back(purity(rho));
      } else if (column == "coherence_l1") {
        row.push_back(coherence_l1(rho));
      } else if (column == "min_eigenvalue") {
        row.push_back(rho.min_eigenvalue());
      }
    }
    append_row(out, row);
  }
  return out;
}

}  // namespace

std::vector<double> TauGrid::values() const {
  std::vector<double> v(static_cast<std::size_t>(std::max(points, 0)));
  if (v.empty()) return v;
  v.front() = min;
  if (v.size() == 1) return v;
  const double last = static_cast<double>(points - 1);
  for (int i = 1; i < points - 1; ++i) {
    const double f = static_cast<double>(i) / last;
    v[static_cast<std::size_t>(i)] =
        scale == TauScale::Log ? min * std::pow(max / min, f) : min + (max - min) * f;
  }
  v.back() = max;
  return v;
}

WavePacket PacketSpec::build() const {
  if (momenta.empty()) {
    return as_config_error("packet", [&] { return gaussian_packet(center, width, n, span); });
  }
  require_config(amplitude_re.size() == momenta.size(), "packet.c_re",
                 "needs one entry per packet.u");
  require_config(amplitude_im.empty() || amplitude_im.size() == momenta.size(), "packet.c_im",
                 "needs one entry per packet.u");
  std::vector<Complex> c(momenta.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = Complex(amplitude_re[i], amplitude_im.empty() ? 0.0 : amplitude_im[i]);
  return as_config_error("packet.u", [&] { return WavePacket::normalized(momenta, c); });
}

const std::vector<std::string>& known_output_columns() {
  static const std::vector<std::string> columns{
      "abs_rho_12", "arg_rho_12", "re_rho_12",    "im_rho_12",     "gamma_vac",
      "gamma_i",    "purity",     "coherence_l1", "min_eigenvalue"};
  return columns;
}

void ScenarioConfig::validate() const {
  require_config(params.alpha > 0.0, "alpha", "must be > 0");
  require_config(params.omega_uv > 0.0, "omega_uv", "must be > 0");
  require_config(params.omega_ir > 0.0, "omega_ir", "must be > 0");
  require_config(params.omega_ir <= params.omega_uv, "omega_ir", "must not exceed omega_uv");
  require_config(params.mass_ratio_m_over_m0 > 0.0, "mass_ratio", "must be > 0");
  require_config(params.kinetic_scale_chi >= 0.0, "chi", "must be >= 0");
  if (regime == Regime::PartiallyCorrelated)
    require_config(params.omega_ir < params.omega_uv, "omega_ir",
                   "must be below omega_uv in the partially correlated regime");
  require_config(tau.points >= 1, "tau.points", "must be >= 1");
  require_config(tau.min >= 0.0, "tau.min", "must be >= 0");
  require_config(tau.max >= tau.min, "tau.max", "must be >= tau.min");
  if (tau.scale == TauScale::Log && tau.points > 1)
    require_config(tau.min > 0.0, "tau.min", "must be > 0 on a log grid");
  require_config(!outputs.empty(), "outputs", "needs at least one column");
  for (const std::string& column : outputs) {
    const auto& known = known_output_columns();
    if (std::find(known.begin(), known.end(), column) == known.end())
      throw ConfigError("outputs", "unknown column '" + column + "'");
  }
  require_config(!figure1_q.empty(), "figure1.q", "needs at least one value");
  for (double q : figure1_q) require_config(q > 0.0, "figure1.q", "values must be > 0");
  require_config(!sweep_q.empty(), "sweep.q", "needs at least one value");
  for (double q : sweep_q) require_config(q > 0.0, "sweep.q", "values must be > 0");
  const WavePacket p = packet.build();
  if (needs_pair(outputs))
    require_config(p.size() >= 2, "packet", "requested columns need at least two momenta");
}

void apply_setting(ScenarioConfig& config, std::string_view key_in, std::string_view value_in) {
  const std::string_view key = trim(key_in);
  const std::string_view value = trim(value_in);
  const std::string k(key);
  PhysicalParams& p = config.params;
  PacketSpec& packet = config.packet;

  if (key == "regime") {
    if (value == "uncorrelated") config.regime = Regime::Uncorrelated;
    else if (value == "partial") config.regime = Regime::PartiallyCorrelated;
    else if (value == "full") config.regime = Regime::FullyCorrelated;
    else bad_choice(key, value, "uncorrelated, partial or full");
  } else if (key == "alpha") {
    p.alpha = parse_double(key, value);
  } else if (key == "omega_uv") {
    p.omega_uv = parse_double(key, value);
  } else if (key == "omega_ir") {
    p.omega_ir = parse_double(key, value);
  } else if (key == "chi") {
    p.kinetic_scale_chi = parse_double(key, value);
  } else if (key == "mass_ratio") {
    p.mass_ratio_m_over_m0 = parse_double(key, value);
  } else if (key == "mass_cutoff") {
    if (value == "exponential") p.mass_cutoff = MassCutoff::Exponential;
    else if (value == "step") p.mass_cutoff = MassCutoff::Step;
    else bad_choice(key, value, "exponential or step");
  } else if (key == "dressing") {
    if (value == "series") config.dressing = DressingMode::Series;
    else if (value == "log") config.dressing = DressingMode::LogApprox;
    else bad_choice(key, value, "series or log");
  } else if (key == "packet.center") {
    packet.center = parse_double(key, value);
  } else if (key == "packet.width") {
    packet.width = parse_double(key, value);
  } else if (key == "packet.n") {
    packet.n = parse_int(key, value);
  } else if (key == "packet.span") {
    packet.span = parse_double(key, value);
  } else if (key == "packet.r0") {
    // Accepted for completeness; the position drops out of every overlap.
    parse_double(key, value);
  } else if (key == "packet.u") {
    packet.momenta = parse_doubles(key, value);
  } else if (key == "packet.c_re") {
    packet.amplitude_re = parse_doubles(key, value);
  } else if (key == "packet.c_im") {
    packet.amplitude_im = parse_doubles(key, value);
  } else if (key == "tau.min") {
    config.tau.min = parse_double(key, value);
  } else if (key == "tau.max") {
    config.tau.max = parse_double(key, value);
  } else if (key == "tau.points") {
    config.tau.points = parse_int(key, value);
  } else if (key == "tau.scale") {
    if (value == "log") config.tau.scale = TauScale::Log;
    else if (value == "linear") config.tau.scale = TauScale::Linear;
    else bad_choice(key, value, "log or linear");
  } else if (key == "outputs") {
    config.outputs.clear();
    for (std::string_view item : split_list(value)) config.outputs.emplace_back(item);
  } else if (key == "figure1.q") {
    config.figure1_q = parse_doubles(key, value);
  } else if (key == "sweep.q") {
    config.sweep_q = parse_doubles(key, value);
  } else {
    throw ConfigError(k.empty() ? std::string("<empty>") : k, "unknown key");
  }
}

ScenarioConfig parse_config(std::string_view text, ScenarioConfig base) {
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no), "expected key = value");
    apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
  }
  return base;
}

ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), std::move(base));
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of −0
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::scientific, 16);
  return ec == std::errc{} ? std::string(buf.data(), ptr) : std::string("nan");
}

RunOutput run_evolve(const ScenarioConfig& config) {
  config.validate();
  RunOutput out;
  const WavePacket packet = config.packet.build();
  collect_warnings(packet, out.warnings);
  std::vector<std::string> header{"tau"};
  header.insert(header.end(), config.outputs.begin(), config.outputs.end());
  append_header(out.csv, header);
  out.csv += evolve_rows(config, packet, config.tau.values(), {});
  return out;
}

RunOutput run_figure1(const ScenarioConfig& config) {
  config.validate();
  RunOutput out;
  std::vector<std::string> header{"tau"};
  for (double q : config.figure1_q) header.push_back("abs_gamma_vac_Q" + format_header_number(q));
  append_header(out.csv, header);
  std::vector<double> row;
  for (double tau : config.tau.values()) {
    row.assign(1, tau);
    for (double q : config.figure1_q) row.push_back(std::abs(gamma_vac_partial_total(q, tau)));
    append_row(out.csv, row);
  }
  return out;
}

RunOutput run_sweep(const ScenarioConfig& config) {
  config.validate();
  RunOutput out;
  std::vector<std::string> header{"q", "tau"};
  header.insert(header.end(), config.outputs.begin(), config.outputs.end());
  append_header(out.csv, header);

  const std::vector<double> taus = config.tau.values();
  const double c = config.packet.center;
  std::vector<WavePacket> packets;
  for (double q : config.sweep_q) {
    // Two equal-weight momenta separated so that (2α/3π)|Δu|² = Q.
    const double du = std::sqrt(3.0 * kPi * q / (2.0 * config.params.alpha));
    std::vector<double> u{c - 0.5 * du, c + 0.5 * du};
    std::vector<Complex> amps(2, Complex(1.0, 0.0));
    packets.push_back(as_config_error("sweep.q", [&] {
      return WavePacket::normalized(std::move(u), std::move(amps));
    }));
  }
  std::vector<std::future<std::string>> jobs;
  for (std::size_t i = 0; i < packets.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] {
      return evolve_rows(config, packets[i], taus, {config.sweep_q[i]});
    }));
  }
  // Rows are emitted in sweep.q order whatever order the jobs finish in.
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    out.csv += jobs[i].get();
    collect_warnings(packets[i], out.warnings);
  }
  return out;
}

}  // namespace decohere
