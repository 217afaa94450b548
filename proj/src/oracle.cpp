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

#include "decohere/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "decohere/error.hpp"

namespace decohere::oracle {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;
// Euler's constant enters the Ci oracle only as the additive constant of its
// integral representation.
constexpr double kEulerGamma = 0.57721566490153286061;
// Upper end of the explicitly panelled part of an e^{−ω/Ω} integral; the
// mapped tail beyond carries a weight below e^{−50}.
constexpr double kExponentialSpan = 50.0;

// 21-point Kronrod nodes/weights and the embedded 10-point Gauss weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208067185402, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double roundoff;
};

Panel gauss_kronrod21(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resk = kWgk[10] * fc;
  double resg = 0.0;
  double resabs = std::abs(resk);
  std::array<double, 10> f1{};
  std::array<double, 10> f2{};
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double sum = f1[j] + f2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 10; ++j)
    resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

  const double width = std::abs(half);
  resasc *= width;
  resabs *= width;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double roundoff = 4.0 * kEps * resabs;
  err = std::max(err, roundoff);
  return {a, b, resk * half, err, roundoff};
}

// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// 1 − sin z / z without cancellation near z = 0.
double one_minus_sinc(double z) {
  const double z2 = z * z;
  if (std::abs(z) < 0.5) {
    double term = z2 / 6.0;
    double sum = 0.0;
    for (int k = 1; k < 12; ++k) {
      sum += term;
      term *= -z2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    }
    return sum;
  }
  return 1.0 - std::sin(z) / z;
}

void require_tolerance(double rel_tol) {
  if (!(rel_tol >= 1e-14 && rel_tol <= 1e-4))
    throw DomainError("rel_tol must lie in [1e-14, 1e-4]");
}

// Uniform subdivision of [lo, hi] into panels no wider than `width`.
void add_uniform(std::vector<double>& bps, double lo, double hi, double width,
                 std::size_t max_panels) {
  const double count = std::ceil((hi - lo) / width);
  if (count > static_cast<double>(max_panels))
    throw NumericalError("integrand oscillates too fast for the panel budget", 0.0);
  const auto n = static_cast<std::size_t>(count);
  for (std::size_t i = 1; i < n; ++i)
    bps.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n));
}

// Geometric points lo·2^k strictly inside (lo, hi).
void add_geometric(std::vector<double>& bps, double lo, double hi) {
  for (double x = 2.0 * lo; x < hi; x *= 2.0) bps.push_back(x);
}

std::vector<double> finalize(std::vector<double> bps) {
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  return bps;
}

QuadResult combine(const QuadResult& x, const QuadResult& y) {
  return {x.value + y.value, x.abs_error + y.abs_error, x.converged && y.converged,
          x.evaluations + y.evaluations, x.panels + y.panels};
}

QuadResult checked(QuadResult r, const char* what) {
  if (!r.converged)
    throw NumericalError(std::string(what) + ": quadrature did not converge", r.abs_error);
  return r;
}

}  // namespace

QuadResult integrate_panels(const Integrand& f, std::span<const double> breakpoints,
                            const QuadOptions& opts) {
  if (breakpoints.size() < 2) throw DomainError("integrate_panels needs two breakpoints");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i] > breakpoints[i - 1]))
      throw DomainError("breakpoints must be strictly increasing");

  auto by_error = [](const Panel& x, const Panel& y) { return x.error < y.error; };
  std::vector<Panel> heap;
  heap.reserve(breakpoints.size() - 1);
  long double total = 0.0L;
  long double total_err = 0.0L;
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    heap.push_back(gauss_kronrod21(f, breakpoints[i - 1], breakpoints[i]));
    total += heap.back().value;
    total_err += heap.back().error;
  }
  std::make_heap(heap.begin(), heap.end(), by_error);

  QuadResult result;
  while (true) {
    const double tol =
        std::max(opts.abs_tol, opts.rel_tol * std::abs(static_cast<double>(total)));
    if (static_cast<double>(total_err) <= tol) {
      result.converged = true;
      break;
    }
    const Panel& worst = heap.front();
    const double mid = 0.5 * (worst.a + worst.b);
    const bool too_narrow = !(mid > worst.a && mid < worst.b);
    const bool roundoff_limited = worst.error <= worst.roundoff;
    if (heap.size() >= opts.max_panels || too_narrow || roundoff_limited) break;

    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Panel old = heap.back();
    heap.pop_back();
    const Panel left = gauss_kronrod21(f, old.a, mid);
    const Panel right = gauss_kronrod21(f, mid, old.b);
    total += static_cast<long double>(left.value) + right.value - old.value;
    total_err += static_cast<long double>(left.error) + right.error - old.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_error);
  }

  // Fixed left-to-right reduction for reproducibility.
  std::sort(heap.begin(), heap.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  CompensatedSum value;
  CompensatedSum error;
  for (const Panel& p : heap) {
    value.add(p.value);
    error.add(p.error);
  }
  result.value = value.value();
  result.abs_error = error.value();
  result.panels = heap.size();
  result.evaluations = 21 * (2 * heap.size() - (breakpoints.size() - 1));
  return result;
}

QuadResult integrate_to_infinity(const Integrand& f, double a, double scale,
                                 const QuadOptions& opts) {
  if (!(scale > 0.0)) throw DomainError("integrate_to_infinity needs scale > 0");
  auto mapped = [&](double x) {
    const double one_minus = 1.0 - x;
    const double omega = a + scale * x / one_minus;
    if (!std::isfinite(omega)) return 0.0;
    const double v = f(omega);
    return v == 0.0 ? 0.0 : v * scale / (one_minus * one_minus);
  };
  static constexpr std::array<double, 8> kMappedBreaks = {0.0,  0.25, 0.5,   0.75,
                                                          0.9,  0.99, 0.999, 1.0};
  return integrate_panels(mapped, kMappedBreaks, opts);
}

double SpectralKernel::operator()(double omega) const {
  double weight = 1.0;
  if (const auto* e = std::get_if<ExponentialCutoff>(&cutoff)) {
    weight = std::exp(-omega / e->omega_uv);
  } else if (const auto* s = std::get_if<StepCutoff>(&cutoff)) {
    if (omega > s->omega_ir) return 0.0;
  } else {
    const auto& sl = std::get<StepLowExponentialCutoff>(cutoff);
    if (omega < sl.omega_ir) return 0.0;
    weight = std::exp(-omega / sl.omega_uv);
  }
  if (weight == 0.0) return 0.0;

  switch (kind) {
    case KernelKind::OneMinusCosOverOmega: {
      const double s = std::sin(0.5 * omega * time);
      return weight * 2.0 * s * s / omega;
    }
    case KernelKind::TMinusSinOverOmega:
      return weight * time * one_minus_sinc(omega * time);
    case KernelKind::OneOverOmega:
      return weight / omega;
  }
  return 0.0;
}

QuadResult integrate(const SpectralKernel& kernel, double rel_tol) {
  require_tolerance(rel_tol);
  const double t = kernel.time;
  if (!(t >= 0.0 && std::isfinite(t))) throw DomainError("kernel time must be finite and >= 0");

  double lo = 0.0;
  double hi = 0.0;
  double tail_scale = 0.0;  // > 0 when the support is unbounded
  if (const auto* e = std::get_if<ExponentialCutoff>(&kernel.cutoff)) {
    if (!(e->omega_uv > 0.0)) throw DomainError("omega_uv must be > 0");
    hi = kExponentialSpan * e->omega_uv;
    tail_scale = e->omega_uv;
  } else if (const auto* s = std::get_if<StepCutoff>(&kernel.cutoff)) {
    if (!(s->omega_ir > 0.0)) throw DomainError("omega_ir must be > 0");
    hi = s->omega_ir;
  } else {
    const auto& sl = std::get<StepLowExponentialCutoff>(kernel.cutoff);
    if (!(sl.omega_ir > 0.0 && sl.omega_uv > 0.0))
      throw DomainError("cutoffs must be > 0");
    lo = sl.omega_ir;
    hi = std::max(lo, kExponentialSpan * sl.omega_uv);
    tail_scale = sl.omega_uv;
  }
  if (kernel.kind == KernelKind::OneOverOmega && lo == 0.0)
    throw DomainError("1/omega kernel is infrared divergent without a lower cutoff");

  const QuadOptions opts{rel_tol, 0.0, std::size_t{1} << 22};
  QuadResult finite;
  if (hi > lo) {
    std::vector<double> bps{lo, hi};
    if (kernel.kind != KernelKind::OneOverOmega && t > 0.0)
      add_uniform(bps, lo, hi, kPi / (4.0 * t), opts.max_panels / 2);
    if (kernel.kind == KernelKind::OneOverOmega) add_geometric(bps, lo, hi);
    finite = integrate_panels(kernel, finalize(std::move(bps)), opts);
  } else {
    finite.converged = true;
  }
  if (tail_scale > 0.0) {
    QuadOptions tail_opts = opts;
    tail_opts.abs_tol = rel_tol * std::abs(finite.value);
    finite = combine(finite, integrate_to_infinity(kernel, hi, tail_scale, tail_opts));
  }
  return checked(finite, "spectral kernel");
}

namespace {

// f(x) and g(x) of the large-argument representation, for x > 0, by
// substituting s = x t in their Laplace integrals.
struct AuxiliaryFG {
  QuadResult f;
  QuadResult g;
};

AuxiliaryFG auxiliary_fg(double x, double rel_tol) {
  const QuadOptions opts{rel_tol, 0.0, std::size_t{1} << 20};
  const double inv = 1.0 / x;
  auto fi = [inv](double s) {
    const double q = s * inv;
    return std::exp(-s) / (1.0 + q * q);
  };
  auto gi = [inv](double s) {
    const double q = s * inv;
    return s * std::exp(-s) / (1.0 + q * q);
  };
  AuxiliaryFG r{checked(integrate_to_infinity(fi, 0.0, 1.0, opts), "f(x)"),
                checked(integrate_to_infinity(gi, 0.0, 1.0, opts), "g(x)")};
  r.f.value *= inv;
  r.f.abs_error *= inv;
  r.g.value *= inv * inv;
  r.g.abs_error *= inv * inv;
  return r;
}

std::vector<double> quarter_period_breaks(double x) {
  std::vector<double> bps{0.0, x};
  add_uniform(bps, 0.0, x, kPi / 4.0, std::size_t{1} << 21);
  return finalize(std::move(bps));
}

}  // namespace

QuadResult cosint_quadrature(double x, double rel_tol) {
  if (!(x > 0.0 && std::isfinite(x))) throw DomainError("cosint_quadrature needs x > 0");
  if (x > direct_oscillatory_limit) {
    const AuxiliaryFG fg = auxiliary_fg(x, rel_tol);
    QuadResult r = combine(fg.f, fg.g);
    r.value = fg.f.value * std::sin(x) - fg.g.value * std::cos(x);
    return r;
  }
  auto integrand = [](double u) {
    const double s = std::sin(0.5 * u);
    return 2.0 * s * s / u;
  };
  QuadResult r = checked(
      integrate_panels(integrand, quarter_period_breaks(x), {rel_tol, 0.0, std::size_t{1} << 22}),
      "cosint");
  const double log_part = kEulerGamma + std::log(x);
  r.value = log_part - r.value;
  r.abs_error += 2.0 * kEps * std::abs(log_part);
  return r;
}

QuadResult sinint_quadrature(double x, double rel_tol) {
  if (!(x >= 0.0 && std::isfinite(x))) throw DomainError("sinint_quadrature needs x >= 0");
  if (x == 0.0) return {0.0, 0.0, true, 0, 0};
  if (x > direct_oscillatory_limit) {
    const AuxiliaryFG fg = auxiliary_fg(x, rel_tol);
    QuadResult r = combine(fg.f, fg.g);
    r.value = kPi / 2.0 - fg.f.value * std::cos(x) - fg.g.value * std::sin(x);
    r.abs_error += kEps * kPi;
    return r;
  }
  auto integrand = [](double u) { return std::sin(u) / u; };
  return checked(
      integrate_panels(integrand, quarter_period_breaks(x), {rel_tol, 0.0, std::size_t{1} << 22}),
      "sinint");
}

QuadResult expint_e1_quadrature(double x, double rel_tol) {
  if (!(x > 0.0 && std::isfinite(x))) throw DomainError("expint_e1_quadrature needs x > 0");
  const QuadOptions opts{rel_tol, 0.0, std::size_t{1} << 20};
  if (x >= 1.0) {
    auto shifted = [x](double s) { return std::exp(-s) / (x + s); };
    QuadResult r = checked(integrate_to_infinity(shifted, 0.0, 1.0, opts), "E1");
    const double scale = std::exp(-x);
    r.value *= scale;
    r.abs_error *= scale;
    return r;
  }
  auto integrand = [](double u) { return std::exp(-u) / u; };
  std::vector<double> bps{x, 1.0};
  add_geometric(bps, x, 1.0);
  const QuadResult head = checked(integrate_panels(integrand, finalize(std::move(bps)), opts), "E1");
  const QuadResult tail = checked(integrate_to_infinity(integrand, 1.0, 1.0, opts), "E1");
  return combine(head, tail);
}

double ModeGrid::spacing() const {
  return (omega_max - omega_min) / static_cast<double>(n_modes);
}

double ModeGrid::mode(std::size_t i) const {
  return omega_min + (static_cast<double>(i) + 0.5) * spacing();
}

void ModeGrid::validate() const {
  if (n_modes < 1) throw DomainError("ModeGrid needs n_modes >= 1");
  if (!(omega_min >= 0.0 && std::isfinite(omega_max) && omega_max > omega_min))
    throw DomainError("ModeGrid needs 0 <= omega_min < omega_max");
}

double discrete_overlap_exponent(const MomentumPair& pair, const ModeGrid& grid,
                                 const PhysicalParams& params) {
  grid.validate();
  params.validate();
  const double du2 = pair.separation_squared();
  if (du2 == 0.0) return 0.0;
  const double h = grid.spacing();
  // Two transverse polarizations averaged over directions: Σ_j (Δu·ε_j)² → (2/3)|Δu|².
  const double polarization_sum = 2.0 / 3.0 * du2;
  CompensatedSum sum;
  for (std::size_t i = 0; i < grid.n_modes; ++i) {
    const double w = grid.mode(i);
    const double modes_in_cell = w * w * h / (2.0 * kPi * kPi);
    const double coupling_sq = params.alpha * 2.0 * kPi / w;  // (e²/m₀²)(2πħ/Vω), per unit (Δu·ε)²
    const double cutoff = std::exp(-w / params.omega_uv);
    sum.add(modes_in_cell * polarization_sum * coupling_sq * cutoff / (2.0 * w * w));
  }
  return sum.value();
}

double continuum_overlap_exponent(const MomentumPair& pair, const ModeGrid& grid,
                                  const PhysicalParams& params, double rel_tol) {
  grid.validate();
  params.validate();
  if (grid.omega_min == 0.0) throw DomainError("continuum exponent diverges at omega_min = 0");
  const double uv = params.omega_uv;
  auto integrand = [uv](double w) { return std::exp(-w / uv) / w; };
  std::vector<double> bps{grid.omega_min, grid.omega_max};
  add_geometric(bps, grid.omega_min, grid.omega_max);
  const QuadResult r = checked(
      integrate_panels(integrand, finalize(std::move(bps)), {rel_tol, 0.0, std::size_t{1} << 20}),
      "continuum overlap");
  return params.alpha * pair.separation_squared() / (3.0 * kPi) * r.value;
}

}  // namespace decohere::oracle
