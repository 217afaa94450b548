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

#include "decohere/density.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "decohere/error.hpp"

namespace decohere {

namespace {

void check_packet(const std::vector<double>& momenta, const std::vector<Complex>& amplitudes) {
  if (momenta.empty()) throw DomainError("wave packet needs at least one momentum");
  if (momenta.size() > max_packet_points)
    throw DomainError("wave packet exceeds max_packet_points");
  if (momenta.size() != amplitudes.size())
    throw DomainError("wave packet momenta and amplitudes differ in length");
  for (std::size_t i = 0; i < momenta.size(); ++i) {
    if (!std::isfinite(momenta[i])) throw DomainError("wave packet momentum is not finite");
    if (i > 0 && !(momenta[i] > momenta[i - 1]))
      throw DomainError("wave packet momenta must be strictly increasing");
    if (!std::isfinite(amplitudes[i].real()) || !std::isfinite(amplitudes[i].imag()))
      throw DomainError("wave packet amplitude is not finite");
  }
}

double norm_squared(const std::vector<Complex>& amplitudes) {
  double s = 0.0;
  for (const Complex& c : amplitudes) s += std::norm(c);
  return s;
}

KineticMass kinetic_mass(Regime regime) {
  switch (regime) {
    case Regime::Uncorrelated:
      return KineticMass::Bare;
    case Regime::PartiallyCorrelated:
      return KineticMass::LowFrequency;
    case Regime::FullyCorrelated:
      return KineticMass::Physical;
  }
  return KineticMass::Bare;
}

void check_regime(const PhysicalParams& params, Regime regime) {
  params.validate();
  if (regime == Regime::PartiallyCorrelated && !(params.omega_ir < params.omega_uv))
    throw DomainError("partially correlated regime needs omega_ir < omega_uv");
}

}  // namespace

WavePacket::WavePacket(std::vector<double> momenta, std::vector<Complex> amplitudes)
    : momenta_(std::move(momenta)), amplitudes_(std::move(amplitudes)) {
  check_packet(momenta_, amplitudes_);
  if (std::abs(norm_squared(amplitudes_) - 1.0) > 1e-12)
    throw DomainError("wave packet amplitudes are not normalized");
}

WavePacket WavePacket::normalized(std::vector<double> momenta, std::vector<Complex> amplitudes) {
  check_packet(momenta, amplitudes);
  const double n2 = norm_squared(amplitudes);
  if (!(n2 > 0.0)) throw DomainError("wave packet amplitudes are all zero");
  const double scale = 1.0 / std::sqrt(n2);
  for (Complex& c : amplitudes) c *= scale;
  return WavePacket(std::move(momenta), std::move(amplitudes));
}

WavePacket gaussian_packet(double center, double width, int n, double span) {
  if (!(width > 0.0 && std::isfinite(width))) throw DomainError("packet width must be > 0");
  if (n < 2) throw DomainError("packet needs n >= 2 points");
  if (!(span > 0.0 && std::isfinite(span))) throw DomainError("packet span must be > 0");
  if (!std::isfinite(center)) throw DomainError("packet center must be finite");
  const double half = span * width;
  const int last = n - 1;
  std::vector<double> u(static_cast<std::size_t>(n));
  std::vector<Complex> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // (2i − last) is exactly antisymmetric, so a centred grid is symmetric.
    const double offset = half * static_cast<double>(2 * i - last) / static_cast<double>(last);
    u[static_cast<std::size_t>(i)] = center + offset;
    c[static_cast<std::size_t>(i)] = std::exp(-offset * offset / (4.0 * width * width));
  }
  return WavePacket::normalized(std::move(u), std::move(c));
}

ReducedDensityMatrix::ReducedDensityMatrix(Eigen::MatrixXcd entries, double tau, Regime regime)
    : entries_(std::move(entries)), tau_(tau), regime_(regime) {
  if (entries_.rows() != entries_.cols()) throw DomainError("density matrix must be square");
}

double ReducedDensityMatrix::hermiticity_defect() const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

double ReducedDensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalError("Hermitian eigensolver failed", 0.0);
  return solver.eigenvalues().minCoeff();
}

DecoherenceValue element_decoherence(const MomentumPair& pair, const PhysicalParams& params,
                                     Regime regime, double tau, const EvolveOptions& options) {
  if (!(tau >= 0.0 && std::isfinite(tau))) throw DomainError("tau must be finite and >= 0");
  const double q = q_factor(pair, params);
  const double qp = qp_factor(pair, params);
  switch (regime) {
    case Regime::Uncorrelated:
      return gamma_uncorrelated(q, qp, tau / params.cutoff_ratio());
    case Regime::PartiallyCorrelated:
      return {gamma_vac_partial_total(q, tau), gamma_i_partial(qp, tau), regime, tau};
    case Regime::FullyCorrelated: {
      const double r = params.cutoff_ratio();
      const double bracket = options.dressing == DressingMode::Series
                                 ? dressing_exponent_series(r)
                                 : std::log(r);
      return {dressing_exponent_weight * q * bracket, 0.0, regime, tau};
    }
  }
  return {};
}

ReducedDensityMatrix evolve(const WavePacket& packet, const PhysicalParams& params,
                            Regime regime, double tau, const EvolveOptions& options) {
  check_regime(params, regime);
  if (!(tau >= 0.0 && std::isfinite(tau))) throw DomainError("tau must be finite and >= 0");

  const auto n = static_cast<Eigen::Index>(packet.size());
  const auto u = packet.momenta();
  const auto c = packet.amplitudes();
  const KineticMass mass = kinetic_mass(regime);

  Eigen::MatrixXcd rho(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    rho(i, i) = std::norm(c[ii]);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      const MomentumPair pair{u[ii], u[jj]};
      const DecoherenceValue g = element_decoherence(pair, params, regime, tau, options);
      const double phase = g.gamma_imag - kinetic_phase_rate(pair, params, mass) * tau;
      Complex value = c[ii] * std::conj(c[jj]) * std::polar(std::exp(g.gamma_real), phase);
      if (regime == Regime::PartiallyCorrelated)
        value *= dressing_factor_full(q_factor(pair, params), params.cutoff_ratio(),
                                      options.dressing).value;
      rho(i, j) = value;
      rho(j, i) = std::conj(value);
    }
  }
  return ReducedDensityMatrix(std::move(rho), tau, regime);
}

double purity(const ReducedDensityMatrix& rho) { return rho.entries().cwiseAbs2().sum(); }

double coherence_l1(const ReducedDensityMatrix& rho) {
  double s = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j)
      if (i != j) s += std::abs(rho(i, j));
  return s;
}

}  // namespace decohere
