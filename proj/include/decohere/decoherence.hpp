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

#ifndef DECOHERE_DECOHERENCE_HPP
#define DECOHERE_DECOHERENCE_HPP

// Closed-form decoherence exponents for the three initial conditions.
//
// Every exponent is a multiple of Q = (2α/3π)|Δu|² (magnitude) or
// Q′ = (2α/3π)(u² − u′²) (phase):
//
//   partially correlated, step cutoff Θ(ϖ − ω), τ = ϖt
//     Γ̄_vac = −Q·[γ − Ci(τ) + ln τ]          Γ̄_i = Q′·[τ − Si(τ)]
//   uncorrelated, exponential cutoff e^{−ω/Ω}, τ_Ω = Ωt
//     Γ_r   = −(Q/2)·ln(1 + τ_Ω²)            Γ_i = Q′·[τ_Ω − arctan τ_Ω]
//   dressing by modes above ϖ (time independent), r = ϖ/Ω
//     ln factor = (Q/2)·[γ + ln r + Σ_{n≥1} (−1)ⁿ rⁿ/(n·n!)] = −(Q/2)·E1(r)
//
// Note the dressing exponent carries half the weight of Γ̄_vac.

#include <string_view>

namespace decohere {

enum class Regime { Uncorrelated, PartiallyCorrelated, FullyCorrelated };

std::string_view to_string(Regime regime);

/// Γ = Γ_r + iΓ_i at one matrix element and time.
struct DecoherenceValue {
  double gamma_real = 0.0;
  double gamma_imag = 0.0;
  Regime regime = Regime::Uncorrelated;
  /// ϖt, or Ωt for the uncorrelated regime.
  double tau = 0.0;
};

/// Weight of Q in the time-dependent vacuum exponent and in the dressing
/// exponent respectively.
inline constexpr double vacuum_exponent_weight = 1.0;
inline constexpr double dressing_exponent_weight = 0.5;

/// Γ̄_vac(Q, τ) = −Q·[γ − Ci(τ) + ln τ]. Requires Q >= 0 and τ > 0.
double gamma_vac_partial(double q, double tau);
/// As gamma_vac_partial, but defined at τ = 0 where it returns exactly 0.
double gamma_vac_partial_total(double q, double tau);

/// Γ̄_i(Q′, τ) = Q′·[τ − Si(τ)], τ >= 0.
double gamma_i_partial(double qp, double tau);

enum class AsymptoticBranch { Small, Large };

/// −Q·τ²/4 (Small, ϖt ≪ 1) or −Q·ln τ (Large, ϖt ≫ 1). No domain checks.
double gamma_vac_asymptotic(double q, double tau, AsymptoticBranch branch);

enum class DressingMode {
  Series,    // full series, valid for every r in (0, 1]
  LogApprox  // leading ln r term only, r ≪ 1
};

/// γ + ln r + Σ_{n≥1} (−1)ⁿ rⁿ/(n·n!), r in (0, 1]. Summed until a term
/// drops below 1e-16 of the running sum, at most 200 terms.
double dressing_exponent_series(double r);

struct DressingFactor {
  double value = 1.0;
  /// Set for r = 0, where the infrared divergence makes the overlap vanish.
  bool divergent = false;
};

/// Time-independent overlap of the dressing clouds of two momenta,
/// exp{(Q/2)·[...]} with the bracket from dressing_exponent_series (or
/// ln r for LogApprox). r = 0 yields value 0 and `divergent` for Q > 0.
/// Throws DomainError for r < 0, r > 1 or Q < 0.
DressingFactor dressing_factor_full(double q, double r,
                                    DressingMode mode = DressingMode::Series);

/// Γ_r and Γ_i of an uncorrelated initial state at τ_Ω = Ωt >= 0.
DecoherenceValue gamma_uncorrelated(double q, double qp, double tau_uv);

struct TransitionSummary {
  double t_tilde = 0.0;
  /// |Γ̄_vac| at τ = 1, i.e. Q·(γ − Ci(1)).
  double gamma_at_transition = 0.0;
};

TransitionSummary transition_summary(double q, double varpi);

}  // namespace decohere

#endif  // DECOHERE_DECOHERENCE_HPP
