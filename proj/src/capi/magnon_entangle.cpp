// Copyright 2026 The magnon-entangle Authors
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

#include "magnon_entangle/magnon_entangle.h"

#include <algorithm>
#include <exception>
#include <memory>
#include <new>
#include <span>
#include <string>
#include <vector>

#include "core/entanglement.hpp"
#include "core/error.hpp"
#include "core/model.hpp"
#include "core/sweep.hpp"

struct me_sweep_job {
  magnon::SweepJob job;
};

struct me_grid {
  std::vector<magnon::GridRecord> records;
  std::size_t nx = 0;
  std::size_t ny = 0;
};

namespace {

using namespace magnon;

thread_local std::string g_last_error;

me_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return ME_ERR_INVALID_ARGUMENT;
    case ErrorCode::SingularMatrix: return ME_ERR_SINGULAR_MATRIX;
    case ErrorCode::NoConvergence: return ME_ERR_NO_CONVERGENCE;
    case ErrorCode::UnstableDrift: return ME_ERR_UNSTABLE_DRIFT;
    case ErrorCode::MeanFieldDivergence: return ME_ERR_MEAN_FIELD_DIVERGENCE;
    case ErrorCode::PhysicalityViolation: return ME_ERR_PHYSICALITY_VIOLATION;
    case ErrorCode::MonogamyViolation: return ME_ERR_MONOGAMY_VIOLATION;
    case ErrorCode::AllUnstable: return ME_ERR_ALL_UNSTABLE;
  }
  return ME_ERR_INTERNAL;
}

template <typename F>
me_status guarded(F&& f) noexcept {
  try {
    f();
    g_last_error.clear();
    return ME_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ME_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ME_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return ME_ERR_INTERNAL;
  }
}

void need(const void* ptr, const char* what) {
  if (ptr == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

SystemParams from_c(const me_params* p) {
  need(p, "params");
  SystemParams s;
  s.kappa = p->kappa;
  s.gamma1 = p->gamma1;
  s.gamma2 = p->gamma2;
  s.g1 = p->g1;
  s.g2 = p->g2;
  s.omega_nl = p->omega_nl;
  s.eps_p = p->eps_p;
  s.delta_c = p->delta_c;
  s.delta_m1 = p->delta_m1;
  s.delta_m2 = p->delta_m2;
  return s;
}

Mat real_square(const double* data, std::size_t n, const char* what) {
  need(data, what);
  return Mat::real(n, n, std::span<const double>(data, n * n));
}

void write_real(const Mat& m, double* out) {
  const auto r = m.real_part();
  std::copy(r.begin(), r.end(), out);
}

Mode to_mode(int i) {
  if (i < 0 || i > 2) throw Error(ErrorCode::InvalidArgument, "mode index must be 0, 1 or 2");
  return static_cast<Mode>(i);
}

Knob knob_named(const char* name, bool axis) {
  need(name, "name");
  const auto k = parse_knob(name);
  if (!k || (axis && !is_axis_knob(*k)))
    throw Error(ErrorCode::InvalidArgument, std::string("unknown parameter name '") + name + "'");
  return *k;
}

Binding binding_named(const char* name) {
  if (name == nullptr) return Binding::None;
  const auto b = parse_binding(name);
  if (!b) throw Error(ErrorCode::InvalidArgument, std::string("unknown binding '") + name + "'");
  return *b;
}

Quantity quantity_named(const char* name) {
  need(name, "quantity");
  const auto q = parse_quantity(name);
  if (!q) throw Error(ErrorCode::InvalidArgument, std::string("unknown quantity '") + name + "'");
  return *q;
}

void to_c(const GridRecord& r, me_record* out) {
  out->x = r.x_value;
  out->y = r.y_value;
  out->stable = r.stable ? 1 : 0;
  out->failure = r.failure ? to_status(*r.failure) : ME_OK;
  out->present_mask = 0;
  for (std::size_t q = 0; q < kQuantityCount; ++q) {
    out->values[q] = 0.0;
    if (r.values[q]) {
      out->values[q] = *r.values[q];
      out->present_mask |= 1u << q;
    }
  }
}

std::vector<Quantity> all_quantities() {
  std::vector<Quantity> qs;
  for (std::size_t q = 0; q < kQuantityCount; ++q) qs.push_back(static_cast<Quantity>(q));
  return qs;
}

}  // namespace

extern "C" {

const char* me_version(void) { return "1.0.0"; }

const char* me_status_string(me_status status) {
  switch (status) {
    case ME_OK: return "ok";
    case ME_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ME_ERR_SINGULAR_MATRIX: return "singular matrix";
    case ME_ERR_NO_CONVERGENCE: return "eigenvalue iteration did not converge";
    case ME_ERR_UNSTABLE_DRIFT: return "unstable drift matrix";
    case ME_ERR_MEAN_FIELD_DIVERGENCE: return "mean field diverges";
    case ME_ERR_PHYSICALITY_VIOLATION: return "unphysical covariance matrix";
    case ME_ERR_MONOGAMY_VIOLATION: return "monogamy violation";
    case ME_ERR_ALL_UNSTABLE: return "no stable point";
    case ME_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* me_last_error(void) { return g_last_error.c_str(); }

void me_params_default(me_params* out) {
  if (out == nullptr) return;
  const SystemParams s;
  *out = me_params{s.kappa,    s.gamma1, s.gamma2,  s.g1,       s.g2,
                   s.omega_nl, s.eps_p,  s.delta_c, s.delta_m1, s.delta_m2};
}

void me_material_default(me_material* out) {
  if (out == nullptr) return;
  const MaterialSpec m;
  *out = me_material{m.spin_density, m.diameter, m.spin};
}

me_status me_steady_state_compute(const me_params* p, me_steady_state* out) {
  return guarded([&] {
    need(out, "out");
    const SteadyState s = steady_state(from_c(p));
    *out = me_steady_state{s.a.real(),  s.a.imag(), s.m1.real(), s.m1.imag(), s.m2.real(),
                           s.m2.imag(), s.n_c,      s.n_m1,      s.n_m2};
  });
}

me_status me_build_drift(const me_params* p, double out[36]) {
  return guarded([&] {
    need(out, "out");
    write_real(build_drift(from_c(p)).value, out);
  });
}

me_status me_build_diffusion(const me_params* p, double out[36]) {
  return guarded([&] {
    need(out, "out");
    write_real(build_diffusion(from_c(p)).value, out);
  });
}

me_status me_stability_margin(const double drift[36], double* out) {
  return guarded([&] {
    need(out, "out");
    *out = stability_margin(DriftMatrix{real_square(drift, 6, "drift")});
  });
}

me_status me_condition_residuals(const me_params* p, me_residuals* out) {
  return guarded([&] {
    need(out, "out");
    const auto r = condition_residuals(from_c(p));
    *out = me_residuals{r.hyperbola, r.antidiag, r.tripartite};
  });
}

me_status me_hp_validity(const me_steady_state* s, const me_material* m, double* out) {
  return guarded([&] {
    need(s, "steady state");
    need(m, "material");
    need(out, "out");
    const MaterialSpec spec{m->spin_density, m->diameter, m->spin};
    spec.validate();
    SteadyState ss;
    ss.n_c = s->n_c;
    ss.n_m1 = s->n_m1;
    ss.n_m2 = s->n_m2;
    *out = hp_validity(ss, spec);
  });
}

me_status me_solve_lyapunov(const double* a, const double* q, size_t n, double* v_out) {
  return guarded([&] {
    need(v_out, "out");
    write_real(solve_lyapunov(real_square(a, n, "A"), real_square(q, n, "Q")), v_out);
  });
}

me_status me_eigenvalues(const double* a, size_t n, double* out) {
  return guarded([&] {
    need(out, "out");
    const auto eigs = eig_general(real_square(a, n, "A"));
    for (std::size_t i = 0; i < eigs.size(); ++i) {
      out[2 * i] = eigs[i].real();
      out[2 * i + 1] = eigs[i].imag();
    }
  });
}

me_status me_steady_covariance(const double drift[36], const double diffusion[36], double v_out[36]) {
  return guarded([&] {
    need(v_out, "out");
    const auto v = steady_covariance(DriftMatrix{real_square(drift, 6, "drift")},
                                     DiffusionMatrix{real_square(diffusion, 6, "diffusion")});
    write_real(v.value, v_out);
  });
}

me_status me_reduce_modes(const double v[36], int first, int second, double v4_out[16]) {
  return guarded([&] {
    need(v4_out, "out");
    write_real(reduce_modes(CovarianceMatrix{real_square(v, 6, "V")}, to_mode(first), to_mode(second)),
               v4_out);
  });
}

me_status me_log_negativity_pair(const double v4[16], double* out) {
  return guarded([&] {
    need(out, "out");
    *out = log_negativity_pair(real_square(v4, 4, "V4"));
  });
}

me_status me_negativity_one_vs_two(const double v[36], int singled, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = negativity_one_vs_two(CovarianceMatrix{real_square(v, 6, "V")}, to_mode(singled));
  });
}

me_status me_residual_contangle(const double v[36], int mode, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = residual_contangle(CovarianceMatrix{real_square(v, 6, "V")}, to_mode(mode));
  });
}

me_status me_min_residual_contangle(const double v[36], double* out) {
  return guarded([&] {
    need(out, "out");
    *out = min_residual_contangle(CovarianceMatrix{real_square(v, 6, "V")});
  });
}

me_status me_analyze(const me_params* p, me_report* out) {
  return guarded([&] {
    need(out, "out");
    const auto r = analyze(from_c(p));
    *out = me_report{r.e_am1, r.e_am2, r.e_m1m2, r.r_min, r.margin, r.stable ? 1 : 0};
  });
}

me_status me_sweep_job_create(const me_params* base, me_sweep_job** out) {
  return guarded([&] {
    need(out, "out");
    auto job = std::make_unique<me_sweep_job>();
    job->job.base = from_c(base);
    job->job.x = Axis{Knob::DeltaC, -10.0, 10.0, 201};
    job->job.y = Axis{Knob::DeltaM, -10.0, 10.0, 201};
    *out = job.release();
  });
}

me_status me_sweep_job_from_figure(const char* figure, const me_params* base, int steps,
                                   me_sweep_job** out) {
  return guarded([&] {
    need(out, "out");
    need(figure, "figure");
    auto job = std::make_unique<me_sweep_job>();
    job->job = figure_preset(figure, from_c(base),
                             steps > 0 ? std::optional<int>(steps) : std::nullopt);
    *out = job.release();
  });
}

void me_sweep_job_destroy(me_sweep_job* job) { delete job; }

me_status me_sweep_job_set_axis(me_sweep_job* job, char which, const char* name, double lo,
                                double hi, int steps) {
  return guarded([&] {
    need(job, "job");
    if (which != 'x' && which != 'y') throw Error(ErrorCode::InvalidArgument, "axis must be 'x' or 'y'");
    Axis axis{knob_named(name, true), lo, hi, steps};
    axis.validate();
    (which == 'x' ? job->job.x : job->job.y) = axis;
  });
}

me_status me_sweep_job_set_inner_scan(me_sweep_job* job, const char* name, double lo, double hi,
                                      int steps) {
  return guarded([&] {
    need(job, "job");
    if (name == nullptr) {
      job->job.inner_scan.reset();
      return;
    }
    Axis axis{knob_named(name, true), lo, hi, steps};
    axis.validate();
    job->job.inner_scan = axis;
  });
}

me_status me_sweep_job_set_binding(me_sweep_job* job, const char* binding) {
  return guarded([&] {
    need(job, "job");
    job->job.binding = binding_named(binding);
  });
}

me_status me_sweep_job_add_quantity(me_sweep_job* job, const char* quantity) {
  return guarded([&] {
    need(job, "job");
    const Quantity q = quantity_named(quantity);
    auto& qs = job->job.quantities;
    if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
  });
}

me_status me_sweep_job_set_threads(me_sweep_job* job, unsigned threads) {
  return guarded([&] {
    need(job, "job");
    job->job.threads = threads;
  });
}

me_status me_sweep_job_axis_name(const me_sweep_job* job, char which, const char** out) {
  return guarded([&] {
    need(job, "job");
    need(out, "out");
    if (which != 'x' && which != 'y') throw Error(ErrorCode::InvalidArgument, "axis must be 'x' or 'y'");
    // names live in static tables, so the pointer stays valid
    *out = to_string(which == 'x' ? job->job.x.name : job->job.y.name).data();
  });
}

me_status me_sweep_job_quantity_count(const me_sweep_job* job, size_t* out) {
  return guarded([&] {
    need(job, "job");
    need(out, "out");
    *out = job->job.quantities.size();
  });
}

me_status me_sweep_job_quantity(const me_sweep_job* job, size_t i, me_quantity* out) {
  return guarded([&] {
    need(job, "job");
    need(out, "out");
    if (i >= job->job.quantities.size()) throw Error(ErrorCode::InvalidArgument, "quantity index out of range");
    *out = static_cast<me_quantity>(job->job.quantities[i]);
  });
}

me_status me_sweep_run(const me_sweep_job* job, me_grid** out) {
  return guarded([&] {
    need(job, "job");
    need(out, "out");
    auto grid = std::make_unique<me_grid>();
    grid->records = map2d(job->job);
    grid->nx = static_cast<std::size_t>(job->job.x.steps);
    grid->ny = static_cast<std::size_t>(job->job.y.steps);
    *out = grid.release();
  });
}

void me_grid_destroy(me_grid* grid) { delete grid; }

size_t me_grid_size(const me_grid* grid) { return grid ? grid->records.size() : 0; }

me_status me_grid_dims(const me_grid* grid, size_t* nx, size_t* ny) {
  return guarded([&] {
    need(grid, "grid");
    need(nx, "nx");
    need(ny, "ny");
    *nx = grid->nx;
    *ny = grid->ny;
  });
}

me_status me_grid_record(const me_grid* grid, size_t i, me_record* out) {
  return guarded([&] {
    need(grid, "grid");
    need(out, "out");
    if (i >= grid->records.size()) throw Error(ErrorCode::InvalidArgument, "record index out of range");
    to_c(grid->records[i], out);
  });
}

me_status me_evaluate_point(const me_params* base, const char* const* names, const double* values,
                            size_t count, const char* binding, me_record* out) {
  return guarded([&] {
    need(out, "out");
    Overrides ov;
    if (count > 0) {
      need(names, "names");
      need(values, "values");
    }
    for (std::size_t i = 0; i < count; ++i) ov.emplace_back(knob_named(names[i], false), values[i]);
    to_c(evaluate_point(from_c(base), ov, binding_named(binding), all_quantities()), out);
  });
}

me_status me_max_over_scan(const me_params* base, const char* scan_name, double lo, double hi,
                           int steps, const char* binding, const char* quantity, double* argmax,
                           double* max) {
  return guarded([&] {
    need(argmax, "argmax");
    need(max, "max");
    const Axis scan{knob_named(scan_name, true), lo, hi, steps};
    const auto r = max_over_scan(from_c(base), scan, binding_named(binding), quantity_named(quantity));
    *argmax = r.argmax;
    *max = r.max;
  });
}

const char* me_quantity_name(me_quantity q) {
  if (q < 0 || q >= ME_Q_COUNT) return "";
  return to_string(static_cast<Quantity>(q)).data();
}

me_status me_figure_count(size_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = figure_names().size();
  });
}

const char* me_figure_name(size_t i) {
  const auto& names = figure_names();
  return i < names.size() ? names[i].data() : "";
}

}  // extern "C"
