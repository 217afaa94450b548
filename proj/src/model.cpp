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

#include "decohere/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "decohere/error.hpp"

namespace decohere {

double PhysicalParams::uv_energy_ratio() const {
  if (!(kinetic_scale_chi > 0.0))
    throw DomainError("mass renormalization needs kinetic_scale_chi > 0");
  return (omega_uv / omega_ir) / kinetic_scale_chi;
}

void PhysicalParams::validate() const {
  if (!(std::isfinite(alpha) && alpha > 0.0)) throw DomainError("alpha must be > 0");
  if (!(std::isfinite(omega_uv) && omega_uv > 0.0))
    throw DomainError("omega_uv must be > 0");
  if (!(omega_ir > 0.0 && omega_ir <= omega_uv))
    throw DomainError("omega_ir must satisfy 0 < omega_ir <= omega_uv");
  if (!(std::isfinite(mass_ratio_m_over_m0) && mass_ratio_m_over_m0 > 0.0))
    throw DomainError("mass_ratio_m_over_m0 must be > 0");
  if (!(std::isfinite(kinetic_scale_chi) && kinetic_scale_chi >= 0.0))
    throw DomainError("kinetic_scale_chi must be >= 0");
}

std::optional<std::string> nonrelativistic_warning(double u) {
  if (std::abs(u) <= nonrelativistic_threshold) return std::nullopt;
  std::ostringstream os;
  os << "momentum |u| = " << std::abs(u) << " exceeds the non-relativistic threshold "
     << nonrelativistic_threshold;
  return os.str();
}

std::optional<std::string> nonrelativistic_warning(const MomentumPair& pair) {
  if (auto w = nonrelativistic_warning(pair.u)) return w;
  return nonrelativistic_warning(pair.u_prime);
}

double coupling_prefactor(double alpha) { return 2.0 * alpha / (3.0 * std::numbers::pi); }

double q_factor(const MomentumPair& pair, const PhysicalParams& params) {
  return coupling_prefactor(params.alpha) * pair.separation_squared();
}

double qp_factor(const MomentumPair& pair, const PhysicalParams& params) {
  return coupling_prefactor(params.alpha) * pair.square_difference();
}

double kinetic_phase_rate(const MomentumPair& pair, const PhysicalParams& params,
                          KineticMass mass) {
  if (params.kinetic_scale_chi == 0.0) return 0.0;
  double m0_over_meff = 1.0;
  switch (mass) {
    case KineticMass::Bare:
      break;
    case KineticMass::Physical:
      m0_over_meff = 1.0 / params.mass_ratio_m_over_m0;
      break;
    case KineticMass::LowFrequency:
      m0_over_meff = 1.0 / (params.mass_ratio_m_over_m0 * m_varpi_over_m(params));
      break;
  }
  return pair.square_difference() * m0_over_meff * params.kinetic_scale_chi / 2.0;
}

double phase_prefactor(const MomentumPair& pair, const PhysicalParams& params) {
  return kinetic_phase_rate(pair, params, KineticMass::LowFrequency);
}

double delta_m_over_m0(const PhysicalParams& params) {
  const double m = params.mass_ratio_m_over_m0;
  return 2.0 * coupling_prefactor(params.alpha) * params.uv_energy_ratio() * m * m;
}

double delta_m_above(const PhysicalParams& params) {
  const double r = params.cutoff_ratio();
  const double fraction =
      params.mass_cutoff == MassCutoff::Exponential ? std::exp(-r) : 1.0 - r;
  return delta_m_over_m0(params) * fraction;
}

double delta_m_below(const PhysicalParams& params) {
  // δm(1 − e^{−r}) computed directly keeps full relative precision for r ≪ 1.
  const double r = params.cutoff_ratio();
  const double fraction =
      params.mass_cutoff == MassCutoff::Exponential ? -std::expm1(-r) : r;
  return delta_m_over_m0(params) * fraction;
}

double m_varpi_over_m(const PhysicalParams& params) {
  return 1.0 / (1.0 + delta_m_below(params) / params.mass_ratio_m_over_m0);
}

}  // namespace decohere
