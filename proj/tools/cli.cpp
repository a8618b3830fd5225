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

#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <utility>

#include <CLI11.hpp>

#include "config.hpp"
#include "output.hpp"

namespace magnon::cli {

namespace {

struct Options {
  std::string config_path;
  std::string out_path;
  std::string pgm_path;
  std::optional<unsigned> threads;
  std::optional<int> steps;
  std::string figure;
  std::optional<double> delta_c, delta_m1, delta_m2, g, omega_nl, eps_p, gamma, kappa;
};

Config resolve_config(const Options& o) {
  Config cfg = o.config_path.empty() ? Config{} : load_config(o.config_path);
  me_params& p = cfg.params;
  if (o.delta_c) p.delta_c = *o.delta_c;
  if (o.delta_m1) p.delta_m1 = *o.delta_m1;
  if (o.delta_m2) p.delta_m2 = *o.delta_m2;
  if (o.g) p.g1 = p.g2 = *o.g;
  if (o.omega_nl) p.omega_nl = *o.omega_nl;
  if (o.eps_p) p.eps_p = *o.eps_p;
  if (o.gamma) p.gamma1 = p.gamma2 = *o.gamma;
  if (o.kappa) p.kappa = *o.kappa;
  return cfg;
}

std::optional<unsigned> resolve_threads(const Options& o) {
  if (o.threads) return o.threads;
  if (const char* env = std::getenv("MAGNON_ENTANGLE_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0) throw ConfigError("MAGNON_ENTANGLE_THREADS must be a non-negative integer");
    return static_cast<unsigned>(v);
  }
  return std::nullopt;
}

// Runs `write` against the --out file or the fallback stream.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file '" + path + "'");
  write(file);
  if (!file) throw ConfigError("failed writing '" + path + "'");
}

int run_point(const Options& o, std::ostream& out) {
  const Config cfg = resolve_config(o);
  me_report report{};
  check(me_analyze(&cfg.params, &report));

  std::optional<me_steady_state> ss;
  me_steady_state s{};
  const me_status st = me_steady_state_compute(&cfg.params, &s);
  if (st == ME_OK) {
    ss = s;
  } else if (st != ME_ERR_MEAN_FIELD_DIVERGENCE) {
    check(st);
  }
  me_residuals res{};
  check(me_condition_residuals(&cfg.params, &res));

  const bool stable = report.stable != 0;
  const auto measure = [&](double v) { return stable ? std::optional<double>(v) : std::nullopt; };
  const auto mean = [&](double me_steady_state::*field) {
    return stable && ss ? std::optional<double>((*ss).*field) : std::nullopt;
  };
  std::optional<double> hp;
  if (stable && ss) {
    double ratio = 0.0;
    check(me_hp_validity(&*ss, &cfg.material, &ratio));
    hp = ratio;
  }

  std::vector<std::pair<std::string, std::optional<double>>> rows{
      {"stable", stable ? 1.0 : 0.0},
      {"margin", report.margin},
      {"e_am1", measure(report.e_am1)},
      {"e_am2", measure(report.e_am2)},
      {"e_m1m2", measure(report.e_m1m2)},
      {"r_min", measure(report.r_min)},
      {"a_re", mean(&me_steady_state::a_re)},
      {"a_im", mean(&me_steady_state::a_im)},
      {"m1_re", mean(&me_steady_state::m1_re)},
      {"m1_im", mean(&me_steady_state::m1_im)},
      {"m2_re", mean(&me_steady_state::m2_re)},
      {"m2_im", mean(&me_steady_state::m2_im)},
      {"n_c", mean(&me_steady_state::n_c)},
      {"n_m1", mean(&me_steady_state::n_m1)},
      {"n_m2", mean(&me_steady_state::n_m2)},
      {"r_hyper", res.hyperbola},
      {"r_antidiag", res.antidiag},
      {"r_tri", res.tripartite},
      {"hp_ratio", hp},
  };
  emit(o.out_path, out, [&](std::ostream& os) { write_key_values(os, rows); });
  return kExitOk;
}

int run_job(const Options& o, me_sweep_job* job, std::ostream& out, std::ostream& err) {
  if (auto t = resolve_threads(o)) check(me_sweep_job_set_threads(job, *t));

  me_grid* raw = nullptr;
  check(me_sweep_run(job, &raw));
  GridHandle grid(raw);

  GridTable table;
  const char* name = nullptr;
  check(me_sweep_job_axis_name(job, 'x', &name));
  table.x_name = name;
  check(me_sweep_job_axis_name(job, 'y', &name));
  table.y_name = name;
  std::size_t nq = 0;
  check(me_sweep_job_quantity_count(job, &nq));
  for (std::size_t i = 0; i < nq; ++i) {
    me_quantity q{};
    check(me_sweep_job_quantity(job, i, &q));
    table.quantities.push_back(q);
  }
  check(me_grid_dims(grid.get(), &table.nx, &table.ny));
  table.records.resize(me_grid_size(grid.get()));
  std::size_t failures = 0;
  for (std::size_t i = 0; i < table.records.size(); ++i) {
    check(me_grid_record(grid.get(), i, &table.records[i]));
    if (table.records[i].failure != ME_OK) ++failures;
  }

  emit(o.out_path, out, [&](std::ostream& os) { write_grid_csv(os, table); });
  if (!o.pgm_path.empty()) {
    std::ofstream pgm(o.pgm_path, std::ios::binary);
    if (!pgm) throw ConfigError("cannot open graymap file '" + o.pgm_path + "'");
    write_pgm(pgm, table, table.quantities.front());
  }
  if (failures > 0) {
    err << "warning: " << failures << " grid point(s) failed numerically and were left empty\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int run_map(const Options& o, std::ostream& out, std::ostream& err) {
  const Config cfg = resolve_config(o);
  if (!cfg.job) throw ConfigError("map needs a config file with a 'job' section");
  JobHandle job = make_job(cfg.params, *cfg.job);
  return run_job(o, job.get(), out, err);
}

int run_figure(const Options& o, std::ostream& out, std::ostream& err) {
  const Config cfg = resolve_config(o);
  me_sweep_job* raw = nullptr;
  check(me_sweep_job_from_figure(o.figure.c_str(), &cfg.params, o.steps.value_or(0), &raw));
  JobHandle job(raw);
  return run_job(o, job.get(), out, err);
}

// Quick oracle checks with known closed-form answers.
int run_selftest(std::ostream& out) {
  int failed = 0;
  const auto report = [&](const char* name, bool ok) {
    out << (ok ? "ok   " : "FAIL ") << name << '\n';
    if (!ok) ++failed;
  };

  me_params vac{};
  me_params_default(&vac);
  vac.g1 = vac.g2 = vac.omega_nl = vac.eps_p = 0.0;
  vac.delta_c = 1.5;
  vac.delta_m1 = -2.0;
  vac.delta_m2 = 0.7;
  double a[36], d[36], v[36];
  bool vacuum_ok = me_build_drift(&vac, a) == ME_OK && me_build_diffusion(&vac, d) == ME_OK &&
                   me_steady_covariance(a, d, v) == ME_OK;
  for (int i = 0; vacuum_ok && i < 36; ++i)
    vacuum_ok = std::abs(v[i] - (i % 7 == 0 ? 0.5 : 0.0)) < 1e-12;
  report("vacuum covariance is I/2", vacuum_ok);

  const double r = 0.5;
  const double c = std::cosh(2 * r) / 2;
  const double s = std::sinh(2 * r) / 2;
  const double tmsv[16] = {c, 0, s, 0, 0, c, 0, -s, s, 0, c, 0, 0, -s, 0, c};
  double e = 0.0;
  report("two-mode squeezed vacuum negativity 2r",
         me_log_negativity_pair(tmsv, &e) == ME_OK && std::abs(e - 2 * r) < 1e-9);

  me_params ref{};
  me_params_default(&ref);
  ref.delta_c = 2.0;
  ref.delta_m1 = ref.delta_m2 = -2.0;
  const double row1[6] = {-1, 0.8, 0, 3.2, 0, 3.2};
  const double row2[6] = {-3.2, -1, -3.2, 0, -3.2, 0};
  bool drift_ok = me_build_drift(&ref, a) == ME_OK;
  for (int j = 0; drift_ok && j < 6; ++j)
    drift_ok = std::abs(a[j] - row1[j]) < 1e-15 && std::abs(a[6 + j] - row2[j]) < 1e-15;
  report("drift matrix substitution", drift_ok);

  ref.delta_c = 6.0;
  ref.delta_m1 = ref.delta_m2 = -6.0;
  bool lyap_ok = me_build_drift(&ref, a) == ME_OK && me_build_diffusion(&ref, d) == ME_OK &&
                 me_solve_lyapunov(a, d, 6, v) == ME_OK;
  if (lyap_ok) {
    double res2 = 0.0, d2 = 0.0;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        double x = d[i * 6 + j];
        for (int k = 0; k < 6; ++k) x += a[i * 6 + k] * v[k * 6 + j] + v[i * 6 + k] * a[j * 6 + k];
        res2 += x * x;
        d2 += d[i * 6 + j] * d[i * 6 + j];
      }
    lyap_ok = std::sqrt(res2) <= 1e-10 * std::sqrt(d2);
  }
  report("Lyapunov residual", lyap_ok);

  return failed == 0 ? kExitOk : kExitNumerical;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Steady-state entanglement maps for a two-photon-pumped cavity with two magnon modes",
               "magnon-entangle"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", o.config_path, "JSON configuration file")->check(CLI::ExistingFile);
  app.add_option("--out", o.out_path, "Output CSV path (default stdout)");
  app.add_option("--threads", o.threads, "Worker threads, 0 = auto (fallback MAGNON_ENTANGLE_THREADS)");
  app.add_option("--pgm", o.pgm_path, "Also write an 8-bit graymap of the first quantity");
  app.add_option("--delta-c", o.delta_c, "Cavity detuning");
  app.add_option("--delta-m1", o.delta_m1, "Magnon 1 detuning");
  app.add_option("--delta-m2", o.delta_m2, "Magnon 2 detuning");
  app.add_option("--g", o.g, "Magnon-cavity coupling (both magnons)");
  app.add_option("--omega-nl", o.omega_nl, "Two-photon nonlinearity");
  app.add_option("--eps-p", o.eps_p, "Probe amplitude");
  app.add_option("--gamma", o.gamma, "Magnon decay rate (both magnons)");
  app.add_option("--kappa", o.kappa, "Cavity decay rate (rate unit)");

  auto* point = app.add_subcommand("point", "Analyze one parameter point");
  auto* map = app.add_subcommand("map", "Run the sweep job from --config");
  auto* figure = app.add_subcommand("figure", "Run a named figure preset");
  std::vector<std::string> names;
  std::size_t count = 0;
  me_figure_count(&count);
  for (std::size_t i = 0; i < count; ++i) names.emplace_back(me_figure_name(i));
  figure->add_option("name", o.figure, "Figure preset")->required()->check(CLI::IsMember(names));
  figure->add_option("--steps", o.steps, "Override the preset grid resolution")->check(CLI::Range(2, 100000));
  auto* selftest = app.add_subcommand("selftest", "Run built-in oracle checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitConfig;
  }

  try {
    if (point->parsed()) return run_point(o, out);
    if (map->parsed()) return run_map(o, out, err);
    if (figure->parsed()) return run_figure(o, out, err);
    if (selftest->parsed()) return run_selftest(out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  err << app.help();
  return kExitConfig;
}

}  // namespace magnon::cli
