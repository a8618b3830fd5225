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

#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "entanglement.hpp"

namespace magnon {

namespace {

struct Named {
  std::string_view name;
  int value;
};

constexpr std::array<Named, 6> kKnobNames{{{"delta_c", 0},
                                           {"delta_m", 1},
                                           {"phi", 2},
                                           {"omega_nl", 3},
                                           {"g", 4},
                                           {"eps_p", 5}}};
constexpr std::array<Named, 3> kBindingNames{
    {{"none", 0}, {"delta_c_eq_neg_delta_m", 1}, {"tri_condition", 2}}};
constexpr std::array<Named, kQuantityCount> kQuantityNames{{{"n_c", 0},
                                                            {"n_m1", 1},
                                                            {"n_m2", 2},
                                                            {"e_am1", 3},
                                                            {"e_am2", 4},
                                                            {"e_m1m2", 5},
                                                            {"r_min", 6}}};

template <typename E, std::size_t N>
std::optional<E> lookup(const std::array<Named, N>& table, std::string_view name) {
  for (const auto& entry : table)
    if (entry.name == name) return static_cast<E>(entry.value);
  return std::nullopt;
}

template <typename E, std::size_t N>
std::string_view name_of(const std::array<Named, N>& table, E value) {
  return table[static_cast<std::size_t>(value)].name;
}

[[noreturn]] void config_error(const std::string& what) {
  throw Error(ErrorCode::InvalidArgument, what);
}

bool binds(Binding binding, Knob knob) {
  switch (binding) {
    case Binding::None: return false;
    case Binding::DeltaCEqNegDeltaM: return knob == Knob::DeltaC;
    case Binding::TriCondition: return knob == Knob::DeltaC || knob == Knob::Phi;
  }
  return false;
}

bool needs_measures(const std::vector<Quantity>& quantities) {
  return std::any_of(quantities.begin(), quantities.end(),
                     [](Quantity q) { return !is_occupation(q); });
}

void set(GridRecord& r, Quantity q, double v) { r.values[static_cast<std::size_t>(q)] = v; }

// Runs body(i) for i in [0, n) on up to `threads` workers. body must not throw.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  }
}

GridRecord scan_max_record(const SystemParams& base, Overrides overrides, const Axis& scan,
                           Binding binding, const std::vector<Quantity>& quantities) {
  GridRecord best;
  overrides.emplace_back(scan.name, 0.0);
  for (int i = 0; i < scan.steps; ++i) {
    overrides.back().second = scan.value(i);
    const GridRecord r = evaluate_point(base, overrides, binding, quantities);
    if (!r.stable) continue;
    best.stable = true;
    for (std::size_t q = 0; q < kQuantityCount; ++q) {
      if (r.values[q] && (!best.values[q] || *r.values[q] > *best.values[q])) best.values[q] = r.values[q];
    }
  }
  return best;
}

}  // namespace

std::optional<Knob> parse_knob(std::string_view name) noexcept { return lookup<Knob>(kKnobNames, name); }
std::string_view to_string(Knob knob) noexcept { return name_of(kKnobNames, knob); }
bool is_axis_knob(Knob knob) noexcept { return knob != Knob::EpsP; }

std::optional<Binding> parse_binding(std::string_view name) noexcept {
  return lookup<Binding>(kBindingNames, name);
}
std::string_view to_string(Binding binding) noexcept { return name_of(kBindingNames, binding); }

std::optional<Quantity> parse_quantity(std::string_view name) noexcept {
  return lookup<Quantity>(kQuantityNames, name);
}
std::string_view to_string(Quantity q) noexcept { return name_of(kQuantityNames, q); }
bool is_occupation(Quantity q) noexcept {
  return q == Quantity::NC || q == Quantity::NM1 || q == Quantity::NM2;
}

double Axis::value(int i) const noexcept {
  if (i >= steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void Axis::validate() const {
  const std::string label(to_string(name));
  if (!is_axis_knob(name)) config_error("'" + label + "' cannot be a sweep axis");
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) config_error("axis " + label + ": need lo < hi");
  if (steps < 2) config_error("axis " + label + ": need at least 2 steps");
}

void SweepJob::validate() const {
  base.validate();
  x.validate();
  y.validate();
  if (x.name == y.name) config_error("x and y axes must differ");
  if (inner_scan) {
    inner_scan->validate();
    if (inner_scan->name == x.name || inner_scan->name == y.name)
      config_error("inner scan axis must differ from x and y");
    if (inner_scan->steps < 3) config_error("inner scan needs at least 3 steps");
  }
  for (const Axis* a : {&x, &y, inner_scan ? &*inner_scan : nullptr}) {
    if (a && binds(binding, a->name)) {
      config_error("'" + std::string(to_string(a->name)) + "' is fixed by binding " +
                   std::string(to_string(binding)));
    }
  }
  if (quantities.empty()) config_error("no quantities requested");
}

SystemParams apply_overrides(const SystemParams& base, const Overrides& overrides, Binding binding) {
  SystemParams p = base;
  double dm = base.delta_m();
  double phi = base.phi();
  bool magnons_moved = false;
  for (const auto& [knob, value] : overrides) {
    switch (knob) {
      case Knob::DeltaC: p.delta_c = value; break;
      case Knob::DeltaM: dm = value; magnons_moved = true; break;
      case Knob::Phi: phi = value; magnons_moved = true; break;
      case Knob::OmegaNl: p.omega_nl = value; break;
      case Knob::G: p.g1 = p.g2 = value; break;
      case Knob::EpsP: p.eps_p = value; break;
    }
  }
  if (binding == Binding::TriCondition) {
    phi = std::copysign(std::sqrt(dm * dm + 2.0 * p.g1 * p.g2), phi);
    magnons_moved = true;
  }
  if (magnons_moved) p.set_magnon_detunings(dm, phi);
  if (binding != Binding::None) p.delta_c = -dm;
  return p;
}

GridRecord evaluate_point(const SystemParams& base, const Overrides& overrides, Binding binding,
                          const std::vector<Quantity>& quantities) {
  for (const auto& [knob, value] : overrides) {
    if (!std::isfinite(value)) config_error("non-finite override for " + std::string(to_string(knob)));
  }
  const SystemParams p = apply_overrides(base, overrides, binding);
  p.validate();

  GridRecord r;
  try {
    EntanglementReport report;
    if (needs_measures(quantities)) {
      report = analyze(p);
    } else {
      report.margin = stability_margin(build_drift(p));
      report.stable = report.margin > 0.0;
    }
    r.stable = report.stable;
    if (!r.stable) return r;

    for (Quantity q : quantities) {
      switch (q) {
        case Quantity::EAm1: set(r, q, report.e_am1); break;
        case Quantity::EAm2: set(r, q, report.e_am2); break;
        case Quantity::EM1M2: set(r, q, report.e_m1m2); break;
        case Quantity::RMin: set(r, q, report.r_min); break;
        default: break;
      }
    }
    if (std::any_of(quantities.begin(), quantities.end(), is_occupation)) {
      try {
        const SteadyState s = steady_state(p);
        for (Quantity q : quantities) {
          if (q == Quantity::NC) set(r, q, s.n_c);
          if (q == Quantity::NM1) set(r, q, s.n_m1);
          if (q == Quantity::NM2) set(r, q, s.n_m2);
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::MeanFieldDivergence) throw;
      }
    }
  } catch (const Error& e) {
    if (e.is_config_error()) throw;
    r.values = {};
    r.failure = e.code();
  }
  return r;
}

std::vector<GridRecord> map2d(const SweepJob& job) {
  job.validate();
  const auto nx = static_cast<std::size_t>(job.x.steps);
  const auto ny = static_cast<std::size_t>(job.y.steps);
  std::vector<GridRecord> out(nx * ny);

  parallel_for(out.size(), job.threads, [&](std::size_t i) {
    const int ix = static_cast<int>(i % nx);
    const int iy = static_cast<int>(i / nx);
    const Overrides ov{{job.x.name, job.x.value(ix)}, {job.y.name, job.y.value(iy)}};
    GridRecord r = job.inner_scan
                       ? scan_max_record(job.base, ov, *job.inner_scan, job.binding, job.quantities)
                       : evaluate_point(job.base, ov, job.binding, job.quantities);
    r.x_value = ov[0].second;
    r.y_value = ov[1].second;
    out[i] = std::move(r);
  });
  return out;
}

ScanMax max_over_scan(const SystemParams& base, const Axis& scan, Binding binding, Quantity quantity) {
  scan.validate();
  if (scan.steps < 3) config_error("scan needs at least 3 steps");
  if (binds(binding, scan.name)) config_error("scan axis is fixed by the binding");

  std::optional<ScanMax> best;
  for (int i = 0; i < scan.steps; ++i) {
    const double x = scan.value(i);
    const GridRecord r = evaluate_point(base, {{scan.name, x}}, binding, {quantity});
    const auto& v = r[quantity];
    if (!r.stable || !v) continue;
    if (!best || *v > best->max) best = ScanMax{x, *v};
  }
  if (!best) throw Error(ErrorCode::AllUnstable, "no stable point in scan");
  return *best;
}

const std::vector<std::string_view>& figure_names() {
  static const std::vector<std::string_view> names{"fig2",  "fig3a", "fig3b", "fig3c", "fig3d",
                                                   "fig4a", "fig4b", "fig5a", "fig5b"};
  return names;
}

SweepJob figure_preset(std::string_view name, const SystemParams& base, std::optional<int> steps) {
  constexpr int kGrid = 201;
  constexpr int kInner = 401;
  const Axis detuning_c{Knob::DeltaC, -10.0, 10.0, kGrid};
  const Axis detuning_m{Knob::DeltaM, -10.0, 10.0, kGrid};
  const Axis omega{Knob::OmegaNl, 0.0, 1.0, kGrid};
  const Axis inner{Knob::DeltaM, 0.1, 20.0, kInner};

  SweepJob job;
  job.base = base;
  job.x = detuning_c;
  job.y = detuning_m;
  using Q = Quantity;
  if (name == "fig2") {
    job.quantities = {Q::NC, Q::NM1};
  } else if (name == "fig3a") {
    job.quantities = {Q::EAm1, Q::EAm2};
  } else if (name == "fig3b") {
    job.quantities = {Q::EM1M2, Q::EAm1};
  } else if (name == "fig3c" || name == "fig3d") {
    job.x = detuning_m;
    job.y = omega;
    job.binding = Binding::DeltaCEqNegDeltaM;
    job.quantities = name == "fig3c" ? std::vector<Q>{Q::EAm1, Q::EAm2} : std::vector<Q>{Q::EM1M2};
  } else if (name == "fig4a") {
    job.quantities = {Q::RMin};
  } else if (name == "fig4b") {
    job.x = Axis{Knob::G, 0.0, 5.0, kGrid};
    job.y = omega;
    job.binding = Binding::DeltaCEqNegDeltaM;
    job.inner_scan = inner;
    job.quantities = {Q::RMin};
  } else if (name == "fig5a") {
    // phi reaches sqrt(2) g + 10 for g = 3.2
    job.x = Axis{Knob::Phi, -15.0, 15.0, kGrid};
    job.y = Axis{Knob::DeltaM, -15.0, 15.0, kGrid};
    job.binding = Binding::DeltaCEqNegDeltaM;
    job.quantities = {Q::RMin};
  } else if (name == "fig5b") {
    job.x = Axis{Knob::Phi, -15.0, 15.0, kGrid};
    job.y = omega;
    job.binding = Binding::DeltaCEqNegDeltaM;
    job.inner_scan = inner;
    job.quantities = {Q::RMin};
  } else {
    config_error("unknown figure '" + std::string(name) + "'");
  }
  if (steps) {
    job.x.steps = *steps;
    job.y.steps = *steps;
  }
  return job;
}

}  // namespace magnon
