/*
 * Copyright 2026 The magnon-entangle Authors
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

/*
 * C interface to the magnon-entangle library: steady states, covariance
 * matrices and Gaussian entanglement measures of a two-photon-pumped cavity
 * coupled to two magnon modes.
 *
 * Every function returns an me_status. On failure a thread-local message is
 * available from me_last_error(). Matrices are passed as row-major double
 * arrays (36 entries for 6x6, 16 for 4x4). Quadrature order is
 * (X, Y, x1, y1, x2, y2); mode indices are 0 = cavity, 1 = magnon 1,
 * 2 = magnon 2. All rates are in units of kappa.
 */

#ifndef MAGNON_ENTANGLE_H
#define MAGNON_ENTANGLE_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(MAGNON_ENTANGLE_BUILD)
#    define ME_API __declspec(dllexport)
#  else
#    define ME_API __declspec(dllimport)
#  endif
#else
#  define ME_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum me_status {
  ME_OK = 0,
  ME_ERR_INVALID_ARGUMENT = 1,
  ME_ERR_SINGULAR_MATRIX = 2,
  ME_ERR_NO_CONVERGENCE = 3,
  ME_ERR_UNSTABLE_DRIFT = 4,
  ME_ERR_MEAN_FIELD_DIVERGENCE = 5,
  ME_ERR_PHYSICALITY_VIOLATION = 6,
  ME_ERR_MONOGAMY_VIOLATION = 7,
  ME_ERR_ALL_UNSTABLE = 8,
  ME_ERR_INTERNAL = 9
} me_status;

/* Quantity column indices used by me_record. */
typedef enum me_quantity {
  ME_Q_N_C = 0,
  ME_Q_N_M1 = 1,
  ME_Q_N_M2 = 2,
  ME_Q_E_AM1 = 3,
  ME_Q_E_AM2 = 4,
  ME_Q_E_M1M2 = 5,
  ME_Q_R_MIN = 6,
  ME_Q_COUNT = 7
} me_quantity;

typedef struct me_params {
  double kappa;
  double gamma1;
  double gamma2;
  double g1;
  double g2;
  double omega_nl;
  double eps_p;
  double delta_c;
  double delta_m1;
  double delta_m2;
} me_params;

typedef struct me_material {
  double spin_density; /* m^-3 */
  double diameter;     /* m */
  double spin;
} me_material;

typedef struct me_steady_state {
  double a_re, a_im;
  double m1_re, m1_im;
  double m2_re, m2_im;
  double n_c, n_m1, n_m2;
} me_steady_state;

typedef struct me_report {
  double e_am1;
  double e_am2;
  double e_m1m2;
  double r_min;
  double margin;
  int stable;
} me_report;

typedef struct me_residuals {
  double hyperbola;  /* delta_c delta_m - 2 g1 g2 */
  double antidiag;   /* delta_c + delta_m */
  double tripartite; /* delta_m^2 - phi^2 + 2 g1 g2 */
} me_residuals;

/* One grid point. Bit q of present_mask is set when values[q] holds a value. */
typedef struct me_record {
  double x;
  double y;
  int stable;
  me_status failure; /* ME_OK unless the point hit a numerical failure */
  unsigned present_mask;
  double values[ME_Q_COUNT];
} me_record;

typedef struct me_sweep_job me_sweep_job;
typedef struct me_grid me_grid;

ME_API const char* me_version(void);
ME_API const char* me_status_string(me_status status);
/* Message of the last failure on the calling thread ("" if none). */
ME_API const char* me_last_error(void);

/* Paper-style defaults: kappa = gamma = 1, g = 3.2, omega_nl = 0.6, eps_p = 1, detunings 0. */
ME_API void me_params_default(me_params* out);
ME_API void me_material_default(me_material* out);

/* Model. */
ME_API me_status me_steady_state_compute(const me_params* p, me_steady_state* out);
ME_API me_status me_build_drift(const me_params* p, double out[36]);
ME_API me_status me_build_diffusion(const me_params* p, double out[36]);
ME_API me_status me_stability_margin(const double drift[36], double* out);
ME_API me_status me_condition_residuals(const me_params* p, me_residuals* out);
ME_API me_status me_hp_validity(const me_steady_state* s, const me_material* m, double* out);

/* Linear algebra on real n x n row-major matrices. */
ME_API me_status me_solve_lyapunov(const double* a, const double* q, size_t n, double* v_out);
/* Eigenvalues of a real n x n matrix, written as (re, im) pairs into out[2n]. */
ME_API me_status me_eigenvalues(const double* a, size_t n, double* out);

/* Entanglement. */
ME_API me_status me_steady_covariance(const double drift[36], const double diffusion[36],
                                      double v_out[36]);
ME_API me_status me_reduce_modes(const double v[36], int first, int second, double v4_out[16]);
ME_API me_status me_log_negativity_pair(const double v4[16], double* out);
ME_API me_status me_negativity_one_vs_two(const double v[36], int singled, double* out);
ME_API me_status me_residual_contangle(const double v[36], int mode, double* out);
ME_API me_status me_min_residual_contangle(const double v[36], double* out);
ME_API me_status me_analyze(const me_params* p, me_report* out);

/*
 * Sweeps. Axis and override names: delta_c, delta_m, phi, omega_nl, g
 * (eps_p is accepted as an override only). Bindings: none,
 * delta_c_eq_neg_delta_m, tri_condition. Quantity names: n_c, n_m1, n_m2,
 * e_am1, e_am2, e_m1m2, r_min.
 */
ME_API me_status me_sweep_job_create(const me_params* base, me_sweep_job** out);
ME_API me_status me_sweep_job_from_figure(const char* figure, const me_params* base, int steps,
                                          me_sweep_job** out); /* steps <= 0 keeps the preset */
ME_API void me_sweep_job_destroy(me_sweep_job* job);
ME_API me_status me_sweep_job_set_axis(me_sweep_job* job, char which, const char* name, double lo,
                                       double hi, int steps); /* which: 'x' or 'y' */
ME_API me_status me_sweep_job_set_inner_scan(me_sweep_job* job, const char* name, double lo,
                                             double hi, int steps); /* name NULL clears */
ME_API me_status me_sweep_job_set_binding(me_sweep_job* job, const char* binding);
ME_API me_status me_sweep_job_add_quantity(me_sweep_job* job, const char* quantity);
ME_API me_status me_sweep_job_set_threads(me_sweep_job* job, unsigned threads);
ME_API me_status me_sweep_job_axis_name(const me_sweep_job* job, char which, const char** out);
ME_API me_status me_sweep_job_quantity_count(const me_sweep_job* job, size_t* out);
ME_API me_status me_sweep_job_quantity(const me_sweep_job* job, size_t i, me_quantity* out);

ME_API me_status me_sweep_run(const me_sweep_job* job, me_grid** out);
ME_API void me_grid_destroy(me_grid* grid);
ME_API size_t me_grid_size(const me_grid* grid);
ME_API me_status me_grid_dims(const me_grid* grid, size_t* nx, size_t* ny);
ME_API me_status me_grid_record(const me_grid* grid, size_t i, me_record* out);

ME_API me_status me_evaluate_point(const me_params* base, const char* const* names,
                                   const double* values, size_t count, const char* binding,
                                   me_record* out); /* all quantities */
ME_API me_status me_max_over_scan(const me_params* base, const char* scan_name, double lo,
                                  double hi, int steps, const char* binding, const char* quantity,
                                  double* argmax, double* max);

ME_API const char* me_quantity_name(me_quantity q);
ME_API me_status me_figure_count(size_t* out);
ME_API const char* me_figure_name(size_t i);

#ifdef __cplusplus
}
#endif

#endif /* MAGNON_ENTANGLE_H */
