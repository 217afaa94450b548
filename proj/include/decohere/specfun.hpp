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

#ifndef DECOHERE_SPECFUN_HPP
#define DECOHERE_SPECFUN_HPP

// Sine, cosine and exponential integrals for real positive arguments.
//
// Ci and Si use their power series for x <= trig_series_limit and the
// continued fraction of E1(ix) above it. E1 uses its power series for
// x <= e1_series_limit and the Lentz-evaluated continued fraction above.
// All functions are pure and reentrant. Out-of-domain arguments (including
// NaN) throw DomainError.

namespace decohere::specfun {

/// Euler-Mascheroni constant to full double precision.
inline constexpr double euler_gamma = 0.5772156649015329;

inline constexpr double trig_series_limit = 4.0;
inline constexpr double e1_series_limit = 1.0;

struct SpecFunResult {
  double value = 0.0;
  double est_abs_error = 0.0;
};

/// Ci(x) = γ + ln x + ∫₀ˣ (cos u − 1)/u du, x > 0.
SpecFunResult cosint(double x);

/// Si(x) = ∫₀ˣ sin u / u du, x >= 0.
SpecFunResult sinint(double x);

/// E1(x) = ∫ₓ^∞ e^{-u}/u du, x > 0. Underflows to exactly 0 for x ≳ 745.
SpecFunResult expint_e1(double x);

/// Cin(x) = γ + ln x − Ci(x) = ∫₀ˣ (1 − cos u)/u du, x >= 0.
/// Evaluated without cancellation for small x.
SpecFunResult cin(double x);

/// x − Si(x) = ∫₀ˣ (1 − sin u/u) du, x >= 0.
SpecFunResult x_minus_si(double x);

/// Ein(x) = γ + ln x + E1(x) = Σ_{n≥1} (−1)^{n+1} xⁿ/(n·n!), x >= 0.
SpecFunResult ein(double x);

// Individual branches, exposed so that the switch points can be checked for
// continuity. Callers should use the functions above.
namespace detail {

struct CiSi {
  SpecFunResult ci;
  SpecFunResult si;
};

/// Power series; accurate for x up to a few units.
CiSi cisi_series(double x);
/// Continued fraction for E1(ix); requires x >= 1.
CiSi cisi_continued_fraction(double x);
SpecFunResult e1_series(double x);
/// Continued fraction; requires x >= 0.5.
SpecFunResult e1_continued_fraction(double x);

}  // namespace detail

}  // namespace decohere::specfun

#endif  // DECOHERE_SPECFUN_HPP
