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
#include <vector>

#include <doctest.h>

#include "decohere/density.hpp"
#include "decohere/error.hpp"

using namespace decohere;

namespace {

const Regime kRegimes[] = {Regime::Uncorrelated, Regime::PartiallyCorrelated,
                           Regime::FullyCorrelated};

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
  return v;
}

PhysicalParams with_phase() {
  PhysicalParams p;
  p.kinetic_scale_chi = 1e4;
  p.mass_ratio_m_over_m0 = 1.2;
  return p;
}

}  // namespace

TEST_CASE("wave packet construction") {
  const WavePacket g = gaussian_packet(0.0, 0.01, 16, 3.0);
  CHECK(g.size() == 16);
  double norm = 0.0;
  for (const Complex& c : g.amplitudes()) norm += std::norm(c);
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-14));
  // Symmetric grid about the centre.
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(g.momenta()[i] == -g.momenta()[g.size() - 1 - i]);
    CHECK(g.amplitudes()[i] == g.amplitudes()[g.size() - 1 - i]);
  }
  CHECK(g.momenta().front() == doctest::Approx(-0.03));

  CHECK_THROWS_AS(WavePacket({0.0, 0.1}, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(WavePacket({0.1, 0.0}, {1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(WavePacket({0.0}, {1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(WavePacket::normalized({0.0, 0.1}, {0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(gaussian_packet(0.0, 0.0, 4, 1.0), DomainError);
  CHECK_THROWS_AS(gaussian_packet(0.0, 0.1, 1, 1.0), DomainError);
  CHECK_THROWS_AS(gaussian_packet(0.0, 0.1, 300, 1.0), DomainError);
}

TEST_CASE("invariants of every evolved matrix") {
  const WavePacket packet = gaussian_packet(0.01, 0.01, 16, 3.0);
  const PhysicalParams params = with_phase();
  for (Regime regime : kRegimes) {
    for (double tau : log_grid(1e-3, 1e3, 20)) {
      const ReducedDensityMatrix rho = evolve(packet, params, regime, tau);
      CAPTURE(tau);
      CHECK(rho.hermiticity_defect() <= 1e-12);
      CHECK(std::abs(rho.trace() - Complex(1.0)) <= 1e-12);
      CHECK(rho.min_eigenvalue() >= -1e-10);
      for (std::size_t i = 0; i < rho.dim(); ++i)
        CHECK(rho(i, i) == Complex(std::norm(packet.amplitudes()[i]), 0.0));
    }
  }
}

TEST_CASE("purity does not increase") {
  const WavePacket packet = gaussian_packet(0.0, 0.02, 16, 3.0);
  const PhysicalParams params = with_phase();
  for (Regime regime : {Regime::Uncorrelated, Regime::PartiallyCorrelated}) {
    double prev = 1.0 + 1e-15;
    for (double tau : log_grid(1e-3, 1e3, 40)) {
      const double p = purity(evolve(packet, params, regime, tau));
      CHECK(p <= prev + 1e-15);
      prev = p;
    }
  }
}

TEST_CASE("initial state") {
  const WavePacket packet = gaussian_packet(0.0, 0.02, 8, 2.0);
  const PhysicalParams params = with_phase();
  // No time has passed: the uncorrelated state is pure.
  const ReducedDensityMatrix rho = evolve(packet, params, Regime::Uncorrelated, 0.0);
  CHECK(purity(rho) == doctest::Approx(1.0).epsilon(1e-14));
  // Partially correlated starts from the dressing overlap only.
  const ReducedDensityMatrix part = evolve(packet, params, Regime::PartiallyCorrelated, 0.0);
  const MomentumPair pair{packet.momenta()[0], packet.momenta()[7]};
  const double d = dressing_factor_full(q_factor(pair, params), params.cutoff_ratio()).value;
  const Complex c0 = packet.amplitudes()[0];
  const Complex c7 = packet.amplitudes()[7];
  CHECK(std::abs(part(0, 7)) == doctest::Approx(std::abs(c0 * std::conj(c7)) * d).epsilon(1e-14));
}

TEST_CASE("fully correlated moduli are frozen") {
  const WavePacket packet = gaussian_packet(0.0, 0.01, 16, 3.0);
  const PhysicalParams params = with_phase();
  const ReducedDensityMatrix start = evolve(packet, params, Regime::FullyCorrelated, 0.0);
  for (double tau : {1.0, 100.0}) {
    const ReducedDensityMatrix rho = evolve(packet, params, Regime::FullyCorrelated, tau);
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t j = 0; j < 16; ++j)
        CHECK(std::abs(std::abs(rho(i, j)) - std::abs(start(i, j))) <= 1e-14);
  }
}

TEST_CASE("element magnitude and phase factorize") {
  const WavePacket packet = WavePacket::normalized({-0.02, 0.03}, {1.0, Complex(0.0, 1.0)});
  const PhysicalParams params = with_phase();
  const MomentumPair pair{-0.02, 0.03};
  const double tau = 7.5;
  const ReducedDensityMatrix rho = evolve(packet, params, Regime::PartiallyCorrelated, tau);
  const DecoherenceValue g = element_decoherence(pair, params, Regime::PartiallyCorrelated, tau);
  const double d = dressing_factor_full(q_factor(pair, params), params.cutoff_ratio()).value;
  CHECK(std::abs(rho(0, 1)) == doctest::Approx(0.5 * std::exp(g.gamma_real) * d).epsilon(1e-14));
  const double phase = -std::numbers::pi / 2 + g.gamma_imag - phase_prefactor(pair, params) * tau;
  const Complex expected = std::polar(1.0, phase);
  CHECK(std::abs(rho(0, 1) / std::abs(rho(0, 1)) - expected) <= 1e-10);
}

TEST_CASE("uncorrelated element uses Omega t") {
  PhysicalParams params;
  params.omega_ir = 0.05;
  const MomentumPair pair{0.0, 0.04};
  const DecoherenceValue g = element_decoherence(pair, params, Regime::Uncorrelated, 0.1);
  const DecoherenceValue direct = gamma_uncorrelated(q_factor(pair, params),
                                                     qp_factor(pair, params), 2.0);
  CHECK(g.gamma_real == doctest::Approx(direct.gamma_real).epsilon(1e-15));
  CHECK(g.gamma_imag == doctest::Approx(direct.gamma_imag).epsilon(1e-15));
}

TEST_CASE("coherence diagnostics") {
  const WavePacket packet = WavePacket::normalized({0.0, 0.01}, {1.0, 1.0});
  const ReducedDensityMatrix rho = evolve(packet, {}, Regime::Uncorrelated, 0.0);
  CHECK(coherence_l1(rho) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(purity(rho) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("partially correlated needs a split") {
  PhysicalParams params;
  params.omega_ir = params.omega_uv;
  const WavePacket packet = WavePacket::normalized({0.0, 0.01}, {1.0, 1.0});
  CHECK_THROWS_AS(evolve(packet, params, Regime::PartiallyCorrelated, 1.0), DomainError);
  CHECK_NOTHROW(evolve(packet, params, Regime::Uncorrelated, 1.0));
  CHECK_THROWS_AS(evolve(packet, {}, Regime::Uncorrelated, -1.0), DomainError);
}
