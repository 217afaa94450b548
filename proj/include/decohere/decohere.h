/*
 * Copyright 2026 The decohere Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DECOHERE_DECOHERE_H
#define DECOHERE_DECOHERE_H

/*
 * C interface to libdecohere.
 *
 * Every function returns a decohere_status. On failure the message is
 * available from decohere_last_error() on the same thread until the next
 * call. Handles are opaque and must be released with the matching
 * *_destroy function; destroying NULL is a no-op.
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DECOHERE_BUILDING_LIBRARY)
#    define DECOHERE_API __declspec(dllexport)
#  else
#    define DECOHERE_API __declspec(dllimport)
#  endif
#else
#  define DECOHERE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum decohere_status {
  DECOHERE_OK = 0,
  DECOHERE_ERR_CONFIG = 1,
  DECOHERE_ERR_NUMERICAL = 2,
  DECOHERE_ERR_DOMAIN = 3,
  DECOHERE_ERR_ARGUMENT = 4,
  DECOHERE_ERR_IO = 5,
  DECOHERE_ERR_INTERNAL = 6
} decohere_status;

typedef enum decohere_regime {
  DECOHERE_UNCORRELATED = 0,
  DECOHERE_PARTIAL = 1,
  DECOHERE_FULL = 2
} decohere_regime;

typedef struct decohere_config decohere_config;
typedef struct decohere_output decohere_output;
typedef struct decohere_density decohere_density;

/* Physical parameters shared by the scalar and density entry points. */
typedef struct decohere_params {
  double alpha;
  double omega_uv;
  double omega_ir;
  double mass_ratio;   /* m/m0 */
  double chi;          /* m0 c^2 / (hbar varpi); 0 disables the kinetic phase */
  int mass_cutoff;     /* 0 exponential, 1 step */
  int dressing;        /* 0 full series, 1 leading log */
} decohere_params;

DECOHERE_API const char* decohere_version(void);
/* Message of the last failure on this thread, "" if none. */
DECOHERE_API const char* decohere_last_error(void);
/* Config field path of the last DECOHERE_ERR_CONFIG on this thread, "" if none. */
DECOHERE_API const char* decohere_last_error_field(void);

DECOHERE_API void decohere_params_default(decohere_params* params);

/* Scenario configuration, see the README for keys. */
DECOHERE_API decohere_status decohere_config_create(decohere_config** out);
DECOHERE_API decohere_status decohere_config_load(decohere_config* config, const char* path);
DECOHERE_API decohere_status decohere_config_parse(decohere_config* config, const char* text);
DECOHERE_API decohere_status decohere_config_set(decohere_config* config, const char* key,
                                                 const char* value);
DECOHERE_API void decohere_config_destroy(decohere_config* config);

/* command: "evolve", "figure1", "sweep" or "validate". For "validate" a
 * failing check yields DECOHERE_ERR_NUMERICAL with the CSV still in *out. */
DECOHERE_API decohere_status decohere_run(const decohere_config* config, const char* command,
                                          decohere_output** out);
DECOHERE_API const char* decohere_output_csv(const decohere_output* output);
DECOHERE_API size_t decohere_output_size(const decohere_output* output);
DECOHERE_API size_t decohere_output_warning_count(const decohere_output* output);
DECOHERE_API const char* decohere_output_warning(const decohere_output* output, size_t index);
DECOHERE_API void decohere_output_destroy(decohere_output* output);

/* Special functions, x > 0. */
DECOHERE_API decohere_status decohere_cosint(double x, double* value);
DECOHERE_API decohere_status decohere_sinint(double x, double* value);
DECOHERE_API decohere_status decohere_expint_e1(double x, double* value);

/* Decoherence exponents. tau = varpi t; tau_uv = Omega t. */
DECOHERE_API decohere_status decohere_gamma_vac_partial(double q, double tau, double* value);
DECOHERE_API decohere_status decohere_gamma_i_partial(double qp, double tau, double* value);
DECOHERE_API decohere_status decohere_gamma_uncorrelated(double q, double qp, double tau_uv,
                                                         double* gamma_real, double* gamma_imag);
/* divergent may be NULL. mode: 0 full series, 1 leading log. */
DECOHERE_API decohere_status decohere_dressing_factor(double q, double r, int mode, double* value,
                                                      int* divergent);

/* Reduced density matrix of the packet sum_i c_i |u_i> at tau = varpi t.
 * Amplitudes are given as separate real and imaginary arrays (c_im may be
 * NULL) and must already be normalized. */
DECOHERE_API decohere_status decohere_evolve(const decohere_params* params,
                                             decohere_regime regime, const double* u,
                                             const double* c_re, const double* c_im, size_t n,
                                             double tau, decohere_density** out);
DECOHERE_API size_t decohere_density_dim(const decohere_density* rho);
DECOHERE_API decohere_status decohere_density_element(const decohere_density* rho, size_t i,
                                                      size_t j, double* re, double* im);
DECOHERE_API double decohere_density_purity(const decohere_density* rho);
DECOHERE_API double decohere_density_coherence_l1(const decohere_density* rho);
DECOHERE_API decohere_status decohere_density_min_eigenvalue(const decohere_density* rho,
                                                             double* value);
DECOHERE_API void decohere_density_destroy(decohere_density* rho);

#ifdef __cplusplus
}
#endif

#endif /* DECOHERE_DECOHERE_H */
