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
#include <vector>

#include <doctest.h>

#include "decohere/error.hpp"
#include "decohere/oracle.hpp"

using namespace decohere;
using namespace decohere::oracle;

namespace {

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

}  // namespace

TEST_CASE("panels integrate smooth functions") {
  const std::vector<double> bps{0.0, 1.0, 3.0};
  const QuadResult r = integrate_panels([](double x) { return x * x; }, bps, {});
  CHECK(r.converged);
  CHECK(rel_close(r.value, 9.0, 1e-14));

  const std::vector<double> pi_bps{0.0, 3.14159265358979323846};
  const QuadResult s = integrate_panels([](double x) { return std::sin(x); }, pi_bps, {});
  CHECK(rel_close(s.value, 2.0, 1e-14));
}

TEST_CASE("mapped tail to infinity") {
  const QuadResult r = integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0, 1.0, {});
  CHECK(r.converged);
  CHECK(rel_close(r.value, 1.0, 1e-12));
}

TEST_CASE("quadrature is bit-reproducible") {
  const SpectralKernel k{KernelKind::OneMinusCosOverOmega, StepCutoff{1.0}, 37.5};
  const QuadResult a = integrate(k, 1e-12);
  const QuadResult b = integrate(k, 1e-12);
  CHECK(a.value == b.value);
  CHECK(a.panels == b.panels);
}

TEST_CASE("step-cutoff kernels against reference values") {
  // ∫₀¹ (1 − cos ωτ)/ω dω = Cin(τ) and ∫₀¹ (τ − sin ωτ/ω) dω = τ − Si(τ).
  const double cin1 = integrate({KernelKind::OneMinusCosOverOmega, StepCutoff{1.0}, 1.0}, 1e-13)
                          .value;
  CHECK(rel_close(cin1, 0.23981174200056472594, 1e-12));
  const double cin10 =
      integrate({KernelKind::OneMinusCosOverOmega, StepCutoff{1.0}, 10.0}, 1e-13).value;
  CHECK(rel_close(cin10, 2.9252571909000339173, 1e-12));
  const double cin001 =
      integrate({KernelKind::OneMinusCosOverOmega, StepCutoff{1.0}, 0.01}, 1e-13).value;
  CHECK(rel_close(cin001, 2.499989583356481450e-5, 1e-12));
  const double xmsi =
      integrate({KernelKind::TMinusSinOverOmega, StepCutoff{1.0}, 1.0}, 1e-13).value;
  CHECK(rel_close(xmsi, 0.053916929632816985059, 1e-12));
}

TEST_CASE("exponential-cutoff kernels against reference values") {
  // τ = 1: ½ ln 2 and 1 − π/4.
  const double re =
      integrate({KernelKind::OneMinusCosOverOmega, ExponentialCutoff{1.0}, 1.0}, 1e-12).value;
  CHECK(rel_close(re, 0.34657359027997265471, 1e-11));
  const double im =
      integrate({KernelKind::TMinusSinOverOmega, ExponentialCutoff{1.0}, 1.0}, 1e-12).value;
  CHECK(rel_close(im, 0.21460183660255169038, 1e-11));
  const double e1 =
      integrate({KernelKind::OneOverOmega, StepLowExponentialCutoff{0.1, 1.0}, 0.0}, 1e-12).value;
  CHECK(rel_close(e1, 1.8229239584193906159, 1e-11));
}

TEST_CASE("kernel scaling with the cutoff") {
  // The integrals depend on Ωt only.
  const double a =
      integrate({KernelKind::OneMinusCosOverOmega, ExponentialCutoff{2.0}, 1.5}, 1e-12).value;
  const double b =
      integrate({KernelKind::OneMinusCosOverOmega, ExponentialCutoff{1.0}, 3.0}, 1e-12).value;
  CHECK(rel_close(a, b, 1e-10));
}

TEST_CASE("special-function oracles") {
  CHECK(rel_close(cosint_quadrature(1.0).value, 0.33740392290096813466, 1e-12));
  CHECK(rel_close(sinint_quadrature(10.0).value, 1.6583475942188740493, 1e-12));
  CHECK(rel_close(expint_e1_quadrature(0.01).value, 4.0379295765381138112, 1e-12));
  CHECK(rel_close(cosint_quadrature(1e6).value, -3.4999443892272049264e-7, 1e-9));
  CHECK(rel_close(sinint_quadrature(1e6).value, 1.5707953900431190815, 1e-14));
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(integrate({KernelKind::OneOverOmega, StepCutoff{1.0}, 0.0}, 1e-10),
                  DomainError);
  CHECK_THROWS_AS(integrate({KernelKind::OneMinusCosOverOmega, StepCutoff{1.0}, 1.0}, 1e-16),
                  DomainError);
  CHECK_THROWS_AS(integrate({KernelKind::OneMinusCosOverOmega, StepCutoff{1.0}, 1.0}, 1e-2),
                  DomainError);
  CHECK_THROWS_AS(integrate({KernelKind::OneMinusCosOverOmega, StepCutoff{1.0}, -1.0}, 1e-10),
                  DomainError);
  CHECK_THROWS_AS((ModeGrid{1.0, 0.5, 10}.validate()), DomainError);
  CHECK_THROWS_AS((ModeGrid{0.0, 1.0, 0}.validate()), DomainError);
}

TEST_CASE("discrete mode sum approaches the continuum from below") {
  PhysicalParams p;
  p.omega_ir = 0.01;
  const MomentumPair pair{0.0, 0.05};
  const double continuum = continuum_overlap_exponent(pair, {0.01, 10.0, 1}, p);
  CHECK(continuum > 0.0);
  double prev_err = 1.0;
  for (std::size_t n : {1000u, 2000u, 4000u, 8000u}) {
    const double d = discrete_overlap_exponent(pair, {0.01, 10.0, n}, p);
    const double err = (continuum - d) / continuum;
    CAPTURE(n);
    CHECK(err > 0.0);
    CHECK(err < prev_err);
    if (prev_err < 1.0) CHECK(err < 0.3 * prev_err);  // second order: ratio ≈ 1/4
    prev_err = err;
  }
  CHECK(discrete_overlap_exponent({0.02, 0.02}, {0.01, 10.0, 100}, p) == 0.0);
}

TEST_CASE("continuum exponent equals (Q/2)·∫ e^{-ω/Ω}/ω") {
  PhysicalParams p;
  const MomentumPair pair{0.0, 0.05};
  const double q = q_factor(pair, p);
  const double expected =
      0.5 * q *
      integrate({KernelKind::OneOverOmega, StepLowExponentialCutoff{0.01, 1.0}, 0.0}, 1e-12)
          .value;
  // Upper limit 1e4·Ω makes the truncated tail negligible.
  CHECK(rel_close(continuum_overlap_exponent(pair, {0.01, 1e4, 1}, p), expected, 1e-10));
}
