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

#include "decohere/decoherence.hpp"

#include <cmath>

#include "decohere/error.hpp"
#include "decohere/specfun.hpp"

namespace decohere {

namespace {

void require_q(double q) {
  if (!(q >= 0.0 && std::isfinite(q))) throw DomainError("Q must be finite and >= 0");
}

// τ − arctan τ; the odd series avoids cancellation for small τ.
double tau_minus_arctan(double tau) {
  if (std::abs(tau) < 0.1) {
    const double t2 = tau * tau;
    double power = tau * t2;
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 3; k < 31; k += 2) {
      sum += sign * power / k;
      power *= t2;
      sign = -sign;
    }
    return sum;
  }
  return tau - std::atan(tau);
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::Uncorrelated:
      return "uncorrelated";
    case Regime::PartiallyCorrelated:
      return "partial";
    case Regime::FullyCorrelated:
      return "full";
  }
  return "unknown";
}

double gamma_vac_partial(double q, double tau) {
  require_q(q);
  if (!(tau > 0.0)) throw DomainError("gamma_vac_partial needs tau > 0");
  return -vacuum_exponent_weight * q * specfun::cin(tau).value;
}

double gamma_vac_partial_total(double q, double tau) {
  if (tau == 0.0) {
    require_q(q);
    return 0.0;
  }
  return gamma_vac_partial(q, tau);
}

double gamma_i_partial(double qp, double tau) {
  if (!std::isfinite(qp)) throw DomainError("Q' must be finite");
  if (!(tau >= 0.0)) throw DomainError("gamma_i_partial needs tau >= 0");
  return qp * specfun::x_minus_si(tau).value;
}

double gamma_vac_asymptotic(double q, double tau, AsymptoticBranch branch) {
  return branch == AsymptoticBranch::Small ? -q * tau * tau / 4.0 : -q * std::log(tau);
}

double dressing_exponent_series(double r) {
  if (!(r > 0.0 && r <= 1.0)) throw DomainError("dressing series needs r in (0, 1]");
  double power_over_factorial = 1.0;  // rⁿ/n!
  double series = 0.0;
  for (int n = 1; n <= 200; ++n) {
    power_over_factorial *= -r / n;
    const double term = power_over_factorial / n;
    series += term;
    if (std::abs(term) < 1e-16 * std::abs(series)) break;
  }
  return specfun::euler_gamma + std::log(r) + series;
}

DressingFactor dressing_factor_full(double q, double r, DressingMode mode) {
  require_q(q);
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("dressing factor needs r in [0, 1]");
  if (q == 0.0) return {1.0, false};
  if (r == 0.0) return {0.0, true};
  const double bracket = mode == DressingMode::Series ? dressing_exponent_series(r) : std::log(r);
  return {std::exp(dressing_exponent_weight * q * bracket), false};
}

DecoherenceValue gamma_uncorrelated(double q, double qp, double tau_uv) {
  require_q(q);
  if (!std::isfinite(qp)) throw DomainError("Q' must be finite");
  if (!(tau_uv >= 0.0)) throw DomainError("gamma_uncorrelated needs tau >= 0");
  DecoherenceValue v;
  v.regime = Regime::Uncorrelated;
  v.tau = tau_uv;
  v.gamma_real = -0.5 * q * std::log1p(tau_uv * tau_uv);
  v.gamma_imag = qp * tau_minus_arctan(tau_uv);
  return v;
}

TransitionSummary transition_summary(double q, double varpi) {
  if (!(varpi > 0.0)) throw DomainError("transition_summary needs varpi > 0");
  return {1.0 / varpi, -gamma_vac_partial(q, 1.0)};
}

}  // namespace decohere
