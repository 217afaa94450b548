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

// Oracle-equivalence suite behind `decohere validate`. Every closed form is
// compared against an independent quadrature of its defining integral.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "decohere/oracle.hpp"
#include "decohere/scenario.hpp"
#include "decohere/specfun.hpp"

namespace decohere {

namespace {

std::vector<double> log_points(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    v[static_cast<std::size_t>(i)] =
        lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1));
  v.back() = hi;
  return v;
}

struct Check {
  std::string name;
  int points = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = true;

  // Error normalized so that <= 1 passes.
  void add(double normalized_error) {
    ++points;
    if (!(normalized_error <= 1.0)) passed = false;
    max_error = std::isnan(normalized_error) ? normalized_error
                                             : std::max(max_error, normalized_error * tolerance);
  }
};

double relative_error(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

Check specfun_check(const char* name, double (*closed)(double),
                    oracle::QuadResult (*quad)(double)) {
  // max(1e-10, 1e-12·|ref|) = 1e-12·max(100, |ref|)
  Check c{name, 0, 0.0, 1e-12, true};
  for (double x : log_points(1e-6, 1e6, 200)) {
    const double ref = quad(x).value;
    c.add(std::abs(closed(x) - ref) / std::max(100.0, std::abs(ref)) / 1e-12);
  }
  return c;
}

Check closed_vs_kernel(const char* name, oracle::KernelKind kind, oracle::Cutoff cutoff,
                       double (*closed)(double), int n, double tol) {
  Check c{name, 0, 0.0, tol, true};
  for (double tau : log_points(1e-3, 1e3, n)) {
    const oracle::QuadResult q = oracle::integrate({kind, cutoff, tau}, 1e-12);
    c.add(relative_error(closed(tau), q.value) / tol);
  }
  return c;
}

Check density_check() {
  Check c{"density_invariants", 0, 0.0, 1e-10, true};
  const WavePacket packet = gaussian_packet(0.0, 0.01, 16, 3.0);
  PhysicalParams params;
  params.kinetic_scale_chi = 1e4;
  const auto taus = log_points(1e-2, 1e2, 20);
  for (Regime regime :
       {Regime::Uncorrelated, Regime::PartiallyCorrelated, Regime::FullyCorrelated}) {
    for (double tau : taus) {
      const ReducedDensityMatrix rho = evolve(packet, params, regime, tau);
      const double herm = rho.hermiticity_defect() / 1e-12;
      const double trace = std::abs(rho.trace() - Complex(1.0, 0.0)) / 1e-12;
      const double eig = std::max(0.0, -rho.min_eigenvalue()) / 1e-10;
      c.add(std::max({herm, trace, eig}));
    }
  }
  return c;
}

Check mode_sum_check() {
  Check c{"mode_sum_continuum", 0, 0.0, 1e-3, true};
  PhysicalParams params;
  params.omega_ir = 0.01;
  const MomentumPair pair{0.0, 0.05};
  const oracle::ModeGrid grid{params.omega_ir, 10.0 * params.omega_uv, 1000000};
  const double continuum = oracle::continuum_overlap_exponent(pair, grid, params);
  c.add(relative_error(oracle::discrete_overlap_exponent(pair, grid, params), continuum) / 1e-3);
  return c;
}

double closed_cin(double t) { return specfun::cin(t).value; }
double closed_x_minus_si(double t) { return specfun::x_minus_si(t).value; }
double closed_half_log(double t) { return 0.5 * std::log1p(t * t); }
double closed_t_minus_atan(double t) { return gamma_uncorrelated(0.0, 1.0, t).gamma_imag; }
double ci(double x) { return specfun::cosint(x).value; }
double si(double x) { return specfun::sinint(x).value; }
double e1(double x) { return specfun::expint_e1(x).value; }
oracle::QuadResult ci_quad(double x) { return oracle::cosint_quadrature(x); }
oracle::QuadResult si_quad(double x) { return oracle::sinint_quadrature(x); }
oracle::QuadResult e1_quad(double x) { return oracle::expint_e1_quadrature(x); }

}  // namespace

RunOutput run_validate(const ScenarioConfig& /*config*/) {
  using oracle::KernelKind;
  std::vector<Check> checks;
  checks.push_back(specfun_check("cosint", ci, ci_quad));
  checks.push_back(specfun_check("sinint", si, si_quad));
  checks.push_back(specfun_check("expint_e1", e1, e1_quad));
  checks.push_back(closed_vs_kernel("gamma_vac_partial", KernelKind::OneMinusCosOverOmega,
                                    oracle::StepCutoff{1.0}, closed_cin, 60, 1e-8));
  checks.push_back(closed_vs_kernel("gamma_i_partial", KernelKind::TMinusSinOverOmega,
                                    oracle::StepCutoff{1.0}, closed_x_minus_si, 60, 1e-8));
  checks.push_back(closed_vs_kernel("gamma_r_uncorrelated", KernelKind::OneMinusCosOverOmega,
                                    oracle::ExponentialCutoff{1.0}, closed_half_log, 40, 1e-8));
  checks.push_back(closed_vs_kernel("gamma_i_uncorrelated", KernelKind::TMinusSinOverOmega,
                                    oracle::ExponentialCutoff{1.0}, closed_t_minus_atan, 40,
                                    1e-8));

  Check dressing{"dressing_series", 0, 0.0, 1e-10, true};
  for (double r : log_points(1e-6, 1.0, 25)) {
    const oracle::QuadResult q = oracle::integrate(
        {KernelKind::OneOverOmega, oracle::StepLowExponentialCutoff{r, 1.0}, 0.0}, 1e-12);
    dressing.add(relative_error(-dressing_exponent_series(r), q.value) / 1e-10);
  }
  checks.push_back(dressing);
  checks.push_back(mode_sum_check());
  checks.push_back(density_check());

  RunOutput out;
  out.csv = "check,points,max_error,tolerance,status\n";
  for (const Check& c : checks) {
    out.csv += c.name + ',' + std::to_string(c.points) + ',' + format_number(c.max_error) + ',' +
               format_number(c.tolerance) + ',' + (c.passed ? "PASS" : "FAIL") + '\n';
    out.passed = out.passed && c.passed;
  }
  return out;
}

}  // namespace decohere
