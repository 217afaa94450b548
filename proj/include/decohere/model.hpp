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

#ifndef DECOHERE_MODEL_HPP
#define DECOHERE_MODEL_HPP

// Physical parameters and the mass renormalization chain.
//
// Everything is dimensionless: momenta u = p/(m₀c), times τ = ϖt, cutoff
// ratio r = ϖ/Ω and kinetic scale χ = m₀c²/(ħϖ). Ω and ϖ only ever enter as
// their ratio or as the unit of time, so any common unit works.
//
// The wave-packet position r₀ drops out of every overlap (both coherent
// amplitudes carry the same e^{ik·r₀}) and is not represented.

#include <optional>
#include <string>

namespace decohere {

/// Cutoff used to split the electromagnetic mass into the parts dressed by
/// modes above and below ϖ.
enum class MassCutoff {
  Exponential,  // δm_{>ϖ} = δm·e^{−ϖ/Ω}
  Step,         // δm_{>ϖ} = δm·(1 − ϖ/Ω)
};

struct PhysicalParams {
  double alpha = 7.2973525693e-3;
  double omega_uv = 1.0;
  double omega_ir = 0.01;
  double mass_ratio_m_over_m0 = 1.0;
  /// m₀c²/(ħϖ). Zero switches the free-evolution phase off.
  double kinetic_scale_chi = 0.0;
  MassCutoff mass_cutoff = MassCutoff::Exponential;

  /// r = ϖ/Ω.
  double cutoff_ratio() const { return omega_ir / omega_uv; }
  /// ħΩ/(m₀c²) = (Ω/ϖ)/χ. Throws DomainError when χ = 0.
  double uv_energy_ratio() const;
  /// Throws DomainError naming the first violated invariant.
  void validate() const;
};

struct MomentumPair {
  double u = 0.0;
  double u_prime = 0.0;

  double separation_squared() const { return (u - u_prime) * (u - u_prime); }
  double square_difference() const { return u * u - u_prime * u_prime; }
};

inline constexpr double nonrelativistic_threshold = 0.1;

/// A warning message when either momentum exceeds the non-relativistic
/// threshold. The formulas stay evaluable, so this is never an error.
std::optional<std::string> nonrelativistic_warning(double u);
std::optional<std::string> nonrelativistic_warning(const MomentumPair& pair);

/// 2α/(3π), the weight of |Δu|² in every decoherence exponent.
double coupling_prefactor(double alpha);

/// Q = (2α/3π)|u − u′|².
double q_factor(const MomentumPair& pair, const PhysicalParams& params);
/// Q′ = (2α/3π)(u² − u′²), the weight of the imaginary exponents.
double qp_factor(const MomentumPair& pair, const PhysicalParams& params);

/// Which mass sets the kinetic phase exp[−it(p² − p′²)/(2 m_eff ħ)].
enum class KineticMass {
  Bare,          // m₀, uncorrelated initial state
  Physical,      // m, fully correlated initial state
  LowFrequency,  // m_ϖ, partially correlated initial state
};

/// (u² − u′²)(m₀/m_eff)·χ/2, so that the free phase at τ = ϖt is
/// exp(−i·rate·τ). Returns 0 without touching the masses when χ = 0.
double kinetic_phase_rate(const MomentumPair& pair, const PhysicalParams& params,
                          KineticMass mass);

/// kinetic_phase_rate with m_eff = m_ϖ.
double phase_prefactor(const MomentumPair& pair, const PhysicalParams& params);

/// δm/m₀ = (4α/3π)(ħΩ/m₀c²)(m/m₀)².
double delta_m_over_m0(const PhysicalParams& params);
/// δm_{>ϖ}/m₀, dressing by modes above ϖ.
double delta_m_above(const PhysicalParams& params);
/// δm_{<ϖ}/m₀ = (δm − δm_{>ϖ})/m₀.
double delta_m_below(const PhysicalParams& params);
/// m_ϖ/m = 1/(1 + δm_{<ϖ}/m).
double m_varpi_over_m(const PhysicalParams& params);

}  // namespace decohere

#endif  // DECOHERE_MODEL_HPP
