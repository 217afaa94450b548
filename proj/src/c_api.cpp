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

#include "decohere/decohere.h"

#include <new>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "decohere/decoherence.hpp"
#include "decohere/density.hpp"
#include "decohere/error.hpp"
#include "decohere/scenario.hpp"
#include "decohere/specfun.hpp"

struct decohere_config {
  decohere::ScenarioConfig config;
};

struct decohere_output {
  decohere::RunOutput run;
};

struct decohere_density {
  decohere::ReducedDensityMatrix rho;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_field;

decohere_status fail(decohere_status status, std::string message, std::string field = {}) {
  last_error = std::move(message);
  last_field = std::move(field);
  return status;
}

template <typename F>
decohere_status guarded(F&& f) {
  last_error.clear();
  last_field.clear();
  try {
    return f();
  } catch (const decohere::ConfigError& e) {
    return fail(DECOHERE_ERR_CONFIG, e.what(), e.field());
  } catch (const decohere::NumericalError& e) {
    return fail(DECOHERE_ERR_NUMERICAL, e.what());
  } catch (const decohere::DomainError& e) {
    return fail(DECOHERE_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DECOHERE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DECOHERE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DECOHERE_ERR_INTERNAL, "unknown error");
  }
}

decohere::PhysicalParams to_params(const decohere_params& p) {
  decohere::PhysicalParams out;
  out.alpha = p.alpha;
  out.omega_uv = p.omega_uv;
  out.omega_ir = p.omega_ir;
  out.mass_ratio_m_over_m0 = p.mass_ratio;
  out.kinetic_scale_chi = p.chi;
  out.mass_cutoff = p.mass_cutoff == 1 ? decohere::MassCutoff::Step
                                       : decohere::MassCutoff::Exponential;
  return out;
}

decohere::DressingMode to_dressing(int mode) {
  return mode == 1 ? decohere::DressingMode::LogApprox : decohere::DressingMode::Series;
}

std::optional<decohere::Regime> to_regime(decohere_regime regime) {
  switch (regime) {
    case DECOHERE_UNCORRELATED:
      return decohere::Regime::Uncorrelated;
    case DECOHERE_PARTIAL:
      return decohere::Regime::PartiallyCorrelated;
    case DECOHERE_FULL:
      return decohere::Regime::FullyCorrelated;
  }
  return std::nullopt;
}

template <typename F>
decohere_status scalar(double* value, F&& f) {
  if (value == nullptr) return fail(DECOHERE_ERR_ARGUMENT, "output pointer is NULL");
  return guarded([&] {
    *value = f();
    return DECOHERE_OK;
  });
}

}  // namespace

extern "C" {

const char* decohere_version(void) { return "0.1.0"; }
const char* decohere_last_error(void) { return last_error.c_str(); }
const char* decohere_last_error_field(void) { return last_field.c_str(); }

void decohere_params_default(decohere_params* params) {
  if (params == nullptr) return;
  const decohere::PhysicalParams d;
  *params = {d.alpha, d.omega_uv, d.omega_ir, d.mass_ratio_m_over_m0, d.kinetic_scale_chi, 0, 0};
}

decohere_status decohere_config_create(decohere_config** out) {
  if (out == nullptr) return fail(DECOHERE_ERR_ARGUMENT, "output pointer is NULL");
  return guarded([&] {
    *out = new decohere_config{};
    return DECOHERE_OK;
  });
}

decohere_status decohere_config_load(decohere_config* config, const char* path) {
  if (config == nullptr || path == nullptr) return fail(DECOHERE_ERR_ARGUMENT, "NULL argument");
  return guarded([&] {
    config->config = decohere::load_config_file(path, config->config);
    return DECOHERE_OK;
  });
}

decohere_status decohere_config_parse(decohere_config* config, const char* text) {
  if (config == nullptr || text == nullptr) return fail(DECOHERE_ERR_ARGUMENT, "NULL argument");
  return guarded([&] {
    config->config = decohere::parse_config(text, config->config);
    return DECOHERE_OK;
  });
}

decohere_status decohere_config_set(decohere_config* config, const char* key, const char* value) {
  if (config == nullptr || key == nullptr || value == nullptr)
    return fail(DECOHERE_ERR_ARGUMENT, "NULL argument");
  return guarded([&] {
    decohere::ScenarioConfig updated = config->config;
    decohere::apply_setting(updated, key, value);
    config->config = std::move(updated);
    return DECOHERE_OK;
  });
}

void decohere_config_destroy(decohere_config* config) { delete config; }

decohere_status decohere_run(const decohere_config* config, const char* command,
                             decohere_output** out) {
  if (config == nullptr || command == nullptr || out == nullptr)
    return fail(DECOHERE_ERR_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    const std::string_view cmd(command);
    decohere::RunOutput run;
    if (cmd == "evolve") run = decohere::run_evolve(config->config);
    else if (cmd == "figure1") run = decohere::run_figure1(config->config);
    else if (cmd == "sweep") run = decohere::run_sweep(config->config);
    else if (cmd == "validate") run = decohere::run_validate(config->config);
    else return fail(DECOHERE_ERR_ARGUMENT, "unknown command '" + std::string(cmd) + "'");
    const bool passed = run.passed;
    *out = new decohere_output{std::move(run)};
    return passed ? DECOHERE_OK : fail(DECOHERE_ERR_NUMERICAL, "validation checks failed");
  });
}

const char* decohere_output_csv(const decohere_output* output) {
  return output == nullptr ? "" : output->run.csv.c_str();
}

size_t decohere_output_size(const decohere_output* output) {
  return output == nullptr ? 0 : output->run.csv.size();
}

size_t decohere_output_warning_count(const decohere_output* output) {
  return output == nullptr ? 0 : output->run.warnings.size();
}

const char* decohere_output_warning(const decohere_output* output, size_t index) {
  if (output == nullptr || index >= output->run.warnings.size()) return "";
  return output->run.warnings[index].c_str();
}

void decohere_output_destroy(decohere_output* output) { delete output; }

decohere_status decohere_cosint(double x, double* value) {
  return scalar(value, [&] { return decohere::specfun::cosint(x).value; });
}

decohere_status decohere_sinint(double x, double* value) {
  return scalar(value, [&] { return decohere::specfun::sinint(x).value; });
}

decohere_status decohere_expint_e1(double x, double* value) {
  return scalar(value, [&] { return decohere::specfun::expint_e1(x).value; });
}

decohere_status decohere_gamma_vac_partial(double q, double tau, double* value) {
  return scalar(value, [&] { return decohere::gamma_vac_partial(q, tau); });
}

decohere_status decohere_gamma_i_partial(double qp, double tau, double* value) {
  return scalar(value, [&] { return decohere::gamma_i_partial(qp, tau); });
}

decohere_status decohere_gamma_uncorrelated(double q, double qp, double tau_uv,
                                            double* gamma_real, double* gamma_imag) {
  if (gamma_real == nullptr || gamma_imag == nullptr)
    return fail(DECOHERE_ERR_ARGUMENT, "output pointer is NULL");
  return guarded([&] {
    const decohere::DecoherenceValue v = decohere::gamma_uncorrelated(q, qp, tau_uv);
    *gamma_real = v.gamma_real;
    *gamma_imag = v.gamma_imag;
    return DECOHERE_OK;
  });
}

decohere_status decohere_dressing_factor(double q, double r, int mode, double* value,
                                         int* divergent) {
  if (value == nullptr) return fail(DECOHERE_ERR_ARGUMENT, "output pointer is NULL");
  return guarded([&] {
    const decohere::DressingFactor d = decohere::dressing_factor_full(q, r, to_dressing(mode));
    *value = d.value;
    if (divergent != nullptr) *divergent = d.divergent ? 1 : 0;
    return DECOHERE_OK;
  });
}

decohere_status decohere_evolve(const decohere_params* params, decohere_regime regime,
                                const double* u, const double* c_re, const double* c_im,
                                size_t n, double tau, decohere_density** out) {
  if (params == nullptr || u == nullptr || c_re == nullptr || out == nullptr)
    return fail(DECOHERE_ERR_ARGUMENT, "NULL argument");
  *out = nullptr;
  const auto reg = to_regime(regime);
  if (!reg) return fail(DECOHERE_ERR_ARGUMENT, "unknown regime");
  return guarded([&] {
    std::vector<double> momenta(u, u + n);
    std::vector<decohere::Complex> amps(n);
    for (size_t i = 0; i < n; ++i) amps[i] = {c_re[i], c_im == nullptr ? 0.0 : c_im[i]};
    const decohere::WavePacket packet(std::move(momenta), std::move(amps));
    *out = new decohere_density{decohere::evolve(packet, to_params(*params), *reg, tau,
                                                 {to_dressing(params->dressing)})};
    return DECOHERE_OK;
  });
}

size_t decohere_density_dim(const decohere_density* rho) {
  return rho == nullptr ? 0 : rho->rho.dim();
}

decohere_status decohere_density_element(const decohere_density* rho, size_t i, size_t j,
                                         double* re, double* im) {
  if (rho == nullptr || re == nullptr || im == nullptr)
    return fail(DECOHERE_ERR_ARGUMENT, "NULL argument");
  if (i >= rho->rho.dim() || j >= rho->rho.dim())
    return fail(DECOHERE_ERR_ARGUMENT, "index out of range");
  const decohere::Complex v = rho->rho(i, j);
  *re = v.real();
  *im = v.imag();
  return DECOHERE_OK;
}

double decohere_density_purity(const decohere_density* rho) {
  return rho == nullptr ? 0.0 : decohere::purity(rho->rho);
}

double decohere_density_coherence_l1(const decohere_density* rho) {
  return rho == nullptr ? 0.0 : decohere::coherence_l1(rho->rho);
}

decohere_status decohere_density_min_eigenvalue(const decohere_density* rho, double* value) {
  if (rho == nullptr) return fail(DECOHERE_ERR_ARGUMENT, "NULL argument");
  return scalar(value, [&] { return rho->rho.min_eigenvalue(); });
}

void decohere_density_destroy(decohere_density* rho) { delete rho; }

}  // extern "C"
