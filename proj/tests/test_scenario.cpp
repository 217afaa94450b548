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

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "decohere/error.hpp"
#include "decohere/scenario.hpp"

using namespace decohere;

namespace {

std::vector<std::string> lines(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

std::string config_error_field(const std::string& text) {
  try {
    parse_config(text).validate();
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "";
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(1.0) == "1.0000000000000000e+00");
  CHECK(format_number(-0.0) == "0.0000000000000000e+00");
  CHECK(format_number(0.1) == "1.0000000000000001e-01");
  CHECK(format_number(-2.5e-300) == "-2.5000000000000000e-300");
  CHECK(std::stod(format_number(std::numbers::ln2)) == std::numbers::ln2);
}

TEST_CASE("tau grid") {
  TauGrid g{1e-2, 1e2, 5, TauScale::Log};
  const auto v = g.values();
  REQUIRE(v.size() == 5);
  CHECK(v.front() == 1e-2);
  CHECK(v[2] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(v.back() == 1e2);
  g = {0.0, 1.0, 3, TauScale::Linear};
  CHECK(g.values() == std::vector<double>{0.0, 0.5, 1.0});
  g = {2.0, 2.0, 1, TauScale::Log};
  CHECK(g.values() == std::vector<double>{2.0});
}

TEST_CASE("config parsing") {
  const ScenarioConfig c = parse_config(R"(
# comment line
regime = uncorrelated
alpha = 0.5   # trailing comment
omega_uv = 2
omega_ir = 0.1
chi = 1e4
mass_ratio = 1.1
mass_cutoff = step
dressing = log
packet.center = 0.01
packet.width = 0.02
packet.n = 4
packet.span = 2
packet.r0 = 3.5
tau.min = 0
tau.max = 10
tau.points = 11
tau.scale = linear
outputs = abs_rho_12, purity
figure1.q = 1, 2
sweep.q = 0.25
)");
  CHECK(c.regime == Regime::Uncorrelated);
  CHECK(c.params.alpha == 0.5);
  CHECK(c.params.omega_uv == 2.0);
  CHECK(c.params.omega_ir == 0.1);
  CHECK(c.params.kinetic_scale_chi == 1e4);
  CHECK(c.params.mass_ratio_m_over_m0 == 1.1);
  CHECK(c.params.mass_cutoff == MassCutoff::Step);
  CHECK(c.dressing == DressingMode::LogApprox);
  CHECK(c.packet.n == 4);
  CHECK(c.tau.scale == TauScale::Linear);
  CHECK(c.outputs == std::vector<std::string>{"abs_rho_12", "purity"});
  CHECK(c.figure1_q == std::vector<double>{1.0, 2.0});
  CHECK(c.sweep_q == std::vector<double>{0.25});
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("config errors carry the field path") {
  CHECK(config_error_field("bogus = 1") == "bogus");
  CHECK(config_error_field("alpha = abc") == "alpha");
  CHECK(config_error_field("alpha = 1x") == "alpha");
  CHECK(config_error_field("regime = sideways") == "regime");
  CHECK(config_error_field("tau.points = 0") == "tau.points");
  CHECK(config_error_field("tau.min = -1") == "tau.min");
  CHECK(config_error_field("tau.min = 0") == "tau.min");  // log grid
  CHECK(config_error_field("tau.min = 5\ntau.max = 1") == "tau.max");
  CHECK(config_error_field("omega_ir = 2") == "omega_ir");
  CHECK(config_error_field("outputs = abs_rho_12, nope") == "outputs");
  CHECK(config_error_field("packet.n = 1") == "packet");
  CHECK(config_error_field("packet.u = 0, 0.1\npacket.c_re = 1") == "packet.c_re");
  CHECK(config_error_field("packet.u = 0.1, 0\npacket.c_re = 1, 1") == "packet.u");
  CHECK(config_error_field("just text") == "line 1");
  CHECK(config_error_field("figure1.q = 0") == "figure1.q");
  CHECK(config_error_field("alpha = 0") == "alpha");
  CHECK(config_error_field("chi = -1") == "chi");
}

TEST_CASE("explicit packets are normalized") {
  const ScenarioConfig c = parse_config("packet.u = -0.01, 0.01\npacket.c_re = 3, 0\n"
                                        "packet.c_im = 0, 4\n");
  const WavePacket p = c.packet.build();
  CHECK(std::abs(p.amplitudes()[0] - Complex(0.6, 0.0)) < 1e-15);
  CHECK(std::abs(p.amplitudes()[1] - Complex(0.0, 0.8)) < 1e-15);
}

TEST_CASE("evolve schema") {
  ScenarioConfig c = parse_config("tau.points = 3\n");
  const RunOutput out = run_evolve(c);
  const auto rows = lines(out.csv);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "tau,abs_rho_12,arg_rho_12,gamma_vac,gamma_i,purity,coherence_l1");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(fields(rows[i]).size() == 7);
  CHECK(out.csv.back() == '\n');
  CHECK(out.csv.find('\r') == std::string::npos);
  CHECK(out.warnings.empty());
}

TEST_CASE("evolve warns for relativistic momenta") {
  const ScenarioConfig c = parse_config("packet.u = 0, 0.5\npacket.c_re = 1, 1\ntau.points = 2\n");
  CHECK(run_evolve(c).warnings.size() == 1);
}

TEST_CASE("figure1 schema and content") {
  const ScenarioConfig c = parse_config("tau.points = 7\nfigure1.q = 0.1, 5\n");
  const auto rows = lines(run_figure1(c).csv);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0] == "tau,abs_gamma_vac_Q0.1,abs_gamma_vac_Q5");
  const auto mid = fields(rows[4]);
  CHECK(std::stod(mid[0]) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::stod(mid[1]) == doctest::Approx(0.1 * 0.23981174200056472594).epsilon(1e-14));
  CHECK(std::stod(mid[2]) == doctest::Approx(5.0 * 0.23981174200056472594).epsilon(1e-14));
}

TEST_CASE("sweep rows are ordered by q and deterministic") {
  const ScenarioConfig c = parse_config("tau.points = 4\nsweep.q = 2, 0.5, 1\n");
  const RunOutput a = run_sweep(c);
  const RunOutput b = run_sweep(c);
  CHECK(a.csv == b.csv);
  const auto rows = lines(a.csv);
  REQUIRE(rows.size() == 13);
  CHECK(rows[0].rfind("q,tau,", 0) == 0);
  CHECK(std::stod(fields(rows[1])[0]) == 2.0);
  CHECK(std::stod(fields(rows[5])[0]) == 0.5);
  CHECK(std::stod(fields(rows[9])[0]) == 1.0);
  // The separation reproduces the requested Q: Γ̄_vac at τ = 1 is −Q·Cin(1).
  const ScenarioConfig one = parse_config("tau.min = 1\ntau.max = 1\ntau.points = 1\n"
                                          "sweep.q = 0.5\noutputs = gamma_vac\n");
  const auto r = fields(lines(run_sweep(one).csv)[1]);
  CHECK(std::stod(r[2]) == doctest::Approx(-0.5 * 0.23981174200056472594).epsilon(1e-12));
}

TEST_CASE("validation suite passes") {
  const RunOutput v = run_validate({});
  CHECK(v.passed);
  CHECK(v.csv.find("FAIL") == std::string::npos);
  CHECK(lines(v.csv).size() == 11);
}
