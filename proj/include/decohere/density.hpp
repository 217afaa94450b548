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

#ifndef DECOHERE_DENSITY_HPP
#define DECOHERE_DENSITY_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "decohere/decoherence.hpp"
#include "decohere/model.hpp"

namespace decohere {

using Complex = std::complex<double>;

/// Dense eigen-decomposition bound; larger packets are rejected.
inline constexpr std::size_t max_packet_points = 256;

/// Collinear momentum-space wave packet Σ_i C_i |u_i⟩.
class WavePacket {
 public:
  /// Throws DomainError unless momenta are finite and strictly increasing,
  /// sizes match, 1 <= size <= max_packet_points and Σ|C_i|² = 1 within 1e-12.
  WavePacket(std::vector<double> momenta, std::vector<Complex> amplitudes);

  /// Same checks, but rescales the amplitudes to unit norm first.
  static WavePacket normalized(std::vector<double> momenta, std::vector<Complex> amplitudes);

  std::size_t size() const { return momenta_.size(); }
  std::span<const double> momenta() const { return momenta_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }

 private:
  std::vector<double> momenta_;
  std::vector<Complex> amplitudes_;
};

/// n points spread evenly over [center − span·width, center + span·width]
/// with C_i ∝ exp(−(u_i − center)²/(4 width²)), normalized.
WavePacket gaussian_packet(double center, double width, int n, double span);

class ReducedDensityMatrix {
 public:
  ReducedDensityMatrix(Eigen::MatrixXcd entries, double tau, Regime regime);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  Complex operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  double tau() const { return tau_; }
  Regime regime() const { return regime_; }

  Complex trace() const { return entries_.trace(); }
  /// max_{ij} |ρ_ij − conj(ρ_ji)|.
  double hermiticity_defect() const;
  double min_eigenvalue() const;

 private:
  Eigen::MatrixXcd entries_;
  double tau_;
  Regime regime_;
};

struct EvolveOptions {
  DressingMode dressing = DressingMode::Series;
};

/// Decoherence exponent of element (u, u′) at τ = ϖt, everything except the
/// free kinetic phase. Uncorrelated: Γ_r + iΓ_i at Ωt = τ/r. Partially
/// correlated: Γ̄_vac + iΓ̄_i. Fully correlated: the (time independent) log
/// of the dressing factor, purely real.
DecoherenceValue element_decoherence(const MomentumPair& pair, const PhysicalParams& params,
                                     Regime regime, double tau,
                                     const EvolveOptions& options = {});

/// ρ(τ) at τ = ϖt >= 0. Off-diagonal elements are
///   C_i C_j*·exp(−i·rate_ij·τ)·exp(Γ_ij)·D_ij
/// where the kinetic mass is m₀, m or m_ϖ for the uncorrelated, fully and
/// partially correlated regimes and D_ij is the dressing factor (partial
/// and full regimes only; for the full regime it is the whole of Γ_ij).
/// Diagonal elements are |C_i|² exactly. Throws DomainError for
/// PartiallyCorrelated with ϖ >= Ω.
ReducedDensityMatrix evolve(const WavePacket& packet, const PhysicalParams& params,
                            Regime regime, double tau, const EvolveOptions& options = {});

/// Tr ρ² = Σ_ij |ρ_ij|².
double purity(const ReducedDensityMatrix& rho);
/// Σ_{i≠j} |ρ_ij|.
double coherence_l1(const ReducedDensityMatrix& rho);

}  // namespace decohere

#endif  // DECOHERE_DENSITY_HPP
