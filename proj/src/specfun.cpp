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

#include "decohere/specfun.hpp"

#include <cmath>
#include <algorithm>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "decohere/error.hpp"

namespace decohere::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxTerms = 200;
constexpr int kMaxFractionTerms = 10000;

void require(bool ok, const char* fn, double x) {
  if (!ok)
    throw DomainError(std::string(fn) + ": argument out of domain (x = " +
                      std::to_string(x) + ")");
}

// Sums of the two entire series
//   Cin(x)    = Σ_{k≥1} (−1)^{k+1} x^{2k}   / (2k (2k)!)
//   x − Si(x) = Σ_{k≥1} (−1)^{k+1} x^{2k+1} / ((2k+1) (2k+1)!)
// together with the sums of absolute values of their terms.
struct EvenOddSeries {
  double cin = 0.0;
  double cin_abs = 0.0;
  double xmsi = 0.0;
  double xmsi_abs = 0.0;
  double tail = 0.0;
};

EvenOddSeries trig_series(double x) {
  EvenOddSeries s;
  if (x == 0.0) return s;
  const double x2 = x * x;
  double even = x2 / 2.0;      // x^{2k}/(2k)!
  double odd = x2 * x / 6.0;   // x^{2k+1}/(2k+1)!
  double sign = 1.0;
  for (int k = 1; k <= kMaxTerms; ++k) {
    const double te = even / (2.0 * k);
    const double to = odd / (2.0 * k + 1.0);
    s.cin += sign * te;
    s.cin_abs += te;
    s.xmsi += sign * to;
    s.xmsi_abs += to;
    s.tail = std::max(te, to);
    if (te <= 0.5 * kEps * std::abs(s.cin) && to <= 0.5 * kEps * std::abs(s.xmsi))
      break;
    even *= x2 / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
    odd *= x2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    sign = -sign;
  }
  return s;
}

// Ein(x) = Σ_{n≥1} (−1)^{n+1} xⁿ/(n·n!).
struct EinSeries {
  double sum = 0.0;
  double abs_sum = 0.0;
  double last = 0.0;
};

EinSeries ein_series(double x) {
  EinSeries s;
  double term = x;  // xⁿ/n!
  double sign = 1.0;
  for (int n = 1; n <= kMaxTerms; ++n) {
    s.last = term / n;
    s.sum += sign * s.last;
    s.abs_sum += s.last;
    if (s.last <= 0.5 * kEps * std::abs(s.sum)) break;
    term *= x / (n + 1.0);
    sign = -sign;
  }
  return s;
}

}  // namespace

namespace detail {

CiSi cisi_series(double x) {
  const EvenOddSeries s = trig_series(x);
  const double log_part = euler_gamma + std::log(x);
  CiSi r;
  r.ci.value = log_part - s.cin;
  r.ci.est_abs_error =
      2.0 * kEps * (s.cin_abs + std::abs(log_part) + std::abs(r.ci.value)) + s.tail;
  r.si.value = x - s.xmsi;
  r.si.est_abs_error = 2.0 * kEps * (s.xmsi_abs + x) + s.tail;
  return r;
}

CiSi cisi_continued_fraction(double x) {
  using C = std::complex<double>;
  // Modified Lentz evaluation of E1(ix) e^{ix}.
  C b(1.0, x);
  C c(1.0 / kTiny, 0.0);
  C d = 1.0 / b;
  C h = d;
  bool converged = false;
  for (int i = 2; i <= kMaxFractionTerms; ++i) {
    const double a = -static_cast<double>(i - 1) * static_cast<double>(i - 1);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw NumericalError("cisi continued fraction did not converge", std::abs(h));
  h *= C(std::cos(x), -std::sin(x));
  CiSi r;
  const double err = 8.0 * kEps * (std::abs(h) + 1.0);
  r.ci = {-h.real(), err};
  r.si = {std::numbers::pi / 2.0 + h.imag(), err + kEps * std::numbers::pi};
  return r;
}

SpecFunResult e1_series(double x) {
  const EinSeries s = ein_series(x);
  const double log_part = euler_gamma + std::log(x);
  const double value = s.sum - log_part;
  return {value, 2.0 * kEps * (s.abs_sum + std::abs(log_part) + std::abs(value)) + s.last};
}

SpecFunResult e1_continued_fraction(double x) {
  double b = x + 1.0;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  bool converged = false;
  for (int i = 1; i <= kMaxFractionTerms; ++i) {
    const double an = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < kEps) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NumericalError("E1 continued fraction did not converge", h);
  const double value = h * std::exp(-x);
  return {value, 8.0 * kEps * value};
}

}  // namespace detail

SpecFunResult cosint(double x) {
  require(x > 0.0, "cosint", x);
  if (std::isinf(x)) return {0.0, 0.0};
  return x <= trig_series_limit ? detail::cisi_series(x).ci
                                : detail::cisi_continued_fraction(x).ci;
}

SpecFunResult sinint(double x) {
  require(x >= 0.0, "sinint", x);
  if (std::isinf(x)) return {std::numbers::pi / 2.0, 0.0};
  if (x == 0.0) return {0.0, 0.0};
  return x <= trig_series_limit ? detail::cisi_series(x).si
                                : detail::cisi_continued_fraction(x).si;
}

SpecFunResult expint_e1(double x) {
  require(x > 0.0, "expint_e1", x);
  if (std::isinf(x)) return {0.0, 0.0};
  return x <= e1_series_limit ? detail::e1_series(x) : detail::e1_continued_fraction(x);
}

SpecFunResult cin(double x) {
  require(x >= 0.0, "cin", x);
  if (x <= trig_series_limit) {
    const EvenOddSeries s = trig_series(x);
    return {s.cin, 2.0 * kEps * s.cin_abs + s.tail};
  }
  const SpecFunResult ci = cosint(x);
  const double log_part = euler_gamma + std::log(x);
  const double value = log_part - ci.value;
  return {value, ci.est_abs_error + 2.0 * kEps * (std::abs(log_part) + std::abs(value))};
}

SpecFunResult x_minus_si(double x) {
  require(x >= 0.0, "x_minus_si", x);
  if (x <= trig_series_limit) {
    const EvenOddSeries s = trig_series(x);
    return {s.xmsi, 2.0 * kEps * s.xmsi_abs + s.tail};
  }
  const SpecFunResult si = sinint(x);
  return {x - si.value, si.est_abs_error + 2.0 * kEps * x};
}

SpecFunResult ein(double x) {
  require(x >= 0.0, "ein", x);
  if (x == 0.0) return {0.0, 0.0};
  if (x <= e1_series_limit) {
    const EinSeries s = ein_series(x);
    return {s.sum, 2.0 * kEps * s.abs_sum + s.last};
  }
  const SpecFunResult e1 = expint_e1(x);
  const double value = euler_gamma + std::log(x) + e1.value;
  return {value, e1.est_abs_error + 2.0 * kEps * std::abs(value)};
}

}  // namespace decohere::specfun
