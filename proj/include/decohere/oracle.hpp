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

#ifndef DECOHERE_ORACLE_HPP
#define DECOHERE_ORACLE_HPP

// Brute-force reference values for every frequency integral used by the
// closed forms. Nothing here calls into specfun or decoherence: the oracle
// must stay an independent route to the same numbers.

#include <cstddef>
#include <functional>
#include <span>
#include <variant>

#include "decohere/model.hpp"

namespace decohere::oracle {

// ---------------------------------------------------------------------------
// Adaptive Gauss-Kronrod engine

struct QuadOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  std::size_t max_panels = std::size_t{1} << 22;
};

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  bool converged = false;
  std::size_t evaluations = 0;
  std::size_t panels = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 21-point Gauss-Kronrod quadrature over the partition
/// given by `breakpoints` (at least two, strictly increasing). The worst
/// panel is bisected until the summed error estimate is at most
/// max(abs_tol, rel_tol·|value|). The final sum is taken over panels in
/// left-to-right order with compensated accumulation, so repeated calls are
/// bit-identical. Never throws on non-convergence; check `converged`.
QuadResult integrate_panels(const Integrand& f, std::span<const double> breakpoints,
                            const QuadOptions& opts);

/// ∫_a^∞ f(ω) dω through ω = a + scale·x/(1 − x).
QuadResult integrate_to_infinity(const Integrand& f, double a, double scale,
                                 const QuadOptions& opts);

// ---------------------------------------------------------------------------
// Spectral kernels of the decoherence and dressing integrals

enum class KernelKind {
  OneMinusCosOverOmega,  // (1 − cos ωt)/ω
  TMinusSinOverOmega,    // t − sin(ωt)/ω
  OneOverOmega,          // 1/ω
};

/// e^{−ω/Ω} on (0, ∞).
struct ExponentialCutoff {
  double omega_uv;
};
/// Θ(ϖ − ω) on (0, ϖ].
struct StepCutoff {
  double omega_ir;
};
/// Θ(ω − ϖ)·e^{−ω/Ω} on [ϖ, ∞).
struct StepLowExponentialCutoff {
  double omega_ir;
  double omega_uv;
};

using Cutoff = std::variant<ExponentialCutoff, StepCutoff, StepLowExponentialCutoff>;

struct SpectralKernel {
  KernelKind kind = KernelKind::OneMinusCosOverOmega;
  Cutoff cutoff = StepCutoff{1.0};
  double time = 0.0;

  /// Integrand value including the cutoff weight.
  double operator()(double omega) const;
};

/// Integral of the kernel over its cutoff support. Oscillatory kernels are
/// split into panels no wider than π/(4t). Throws DomainError for
/// rel_tol outside [1e-14, 1e-4] or for an infrared-divergent kernel
/// (1/ω without a lower cutoff), NumericalError with the achieved error on
/// non-convergence.
QuadResult integrate(const SpectralKernel& kernel, double rel_tol);

// ---------------------------------------------------------------------------
// Special functions by quadrature

/// Ci(x) = γ + ln x − ∫₀ˣ (1 − cos u)/u du for x ≤ 1e3; above that through
/// the auxiliary functions f(x) = ∫₀^∞ e^{−xt}/(1+t²) dt and
/// g(x) = ∫₀^∞ t e^{−xt}/(1+t²) dt, Ci = f sin x − g cos x.
QuadResult cosint_quadrature(double x, double rel_tol = 1e-13);
/// Si(x) = ∫₀ˣ sin u/u du, or π/2 − f cos x − g sin x above 1e3.
QuadResult sinint_quadrature(double x, double rel_tol = 1e-13);
/// E1(x) = ∫ₓ^∞ e^{−u}/u du; for x ≥ 1 as e^{−x} ∫₀^∞ e^{−s}/(x+s) ds.
QuadResult expint_e1_quadrature(double x, double rel_tol = 1e-13);

inline constexpr double direct_oscillatory_limit = 1e3;

// ---------------------------------------------------------------------------
// Discrete field-mode sum

/// Uniform frequency lattice on [omega_min, omega_max] with n_modes cells,
/// sampled at cell midpoints. The two transverse polarizations and the
/// angular integral are folded into the scalar weight (2/3)|Δu|².
struct ModeGrid {
  double omega_min = 0.0;
  double omega_max = 1.0;
  std::size_t n_modes = 1;

  double spacing() const;
  double mode(std::size_t i) const;
  void validate() const;
};

/// Σ_modes (Δg)²/(2ħ²ω²) in units ħ = c = m₀ = V = 1 with the e^{−ω/Ω}
/// cutoff weight. The overlap of the two dressing clouds is exp(−result).
/// In the fine-grid limit this tends to (α|Δu|²/3π) ∫ e^{−ω/Ω}/ω dω over
/// the grid support; midpoint sampling approaches it from below.
double discrete_overlap_exponent(const MomentumPair& pair, const ModeGrid& grid,
                                 const PhysicalParams& params);

/// The matching continuum value (α|Δu|²/3π) ∫ e^{−ω/Ω}/ω dω over the grid
/// support, by adaptive quadrature.
double continuum_overlap_exponent(const MomentumPair& pair, const ModeGrid& grid,
                                  const PhysicalParams& params, double rel_tol = 1e-12);

}  // namespace decohere::oracle

#endif  // DECOHERE_ORACLE_HPP
