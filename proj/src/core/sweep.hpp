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

// Two-dimensional parameter maps, inner-scan maximization and the figure presets.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "model.hpp"

namespace magnon {

/// Parameters a sweep or override may touch. DeltaM and Phi move the magnon
/// detunings as (delta_m1, delta_m2) = (delta_m + phi, delta_m - phi); G sets g1 = g2.
enum class Knob { DeltaC, DeltaM, Phi, OmegaNl, G, EpsP };

std::optional<Knob> parse_knob(std::string_view name) noexcept;
std::string_view to_string(Knob knob) noexcept;
/// EpsP may be overridden but is not a sweep axis.
bool is_axis_knob(Knob knob) noexcept;

enum class Binding { None, DeltaCEqNegDeltaM, TriCondition };

std::optional<Binding> parse_binding(std::string_view name) noexcept;
std::string_view to_string(Binding binding) noexcept;

enum class Quantity { NC, NM1, NM2, EAm1, EAm2, EM1M2, RMin };
inline constexpr std::size_t kQuantityCount = 7;

std::optional<Quantity> parse_quantity(std::string_view name) noexcept;
std::string_view to_string(Quantity q) noexcept;
bool is_occupation(Quantity q) noexcept;

struct Axis {
  Knob name = Knob::DeltaC;
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;

  /// Grid value i; the last point is exactly hi.
  double value(int i) const noexcept;
  void validate() const;
};

struct SweepJob {
  SystemParams base;
  Axis x;
  Axis y;
  Binding binding = Binding::None;
  std::optional<Axis> inner_scan;
  std::vector<Quantity> quantities;
  unsigned threads = 0;  // 0 = hardware concurrency

  void validate() const;
};

struct GridRecord {
  double x_value = 0.0;
  double y_value = 0.0;
  bool stable = false;
  std::array<std::optional<double>, kQuantityCount> values{};
  std::optional<ErrorCode> failure;  // numerical failure at this point, if any

  const std::optional<double>& operator[](Quantity q) const noexcept {
    return values[static_cast<std::size_t>(q)];
  }
};

using Overrides = std::vector<std::pair<Knob, double>>;

/// Applies overrides, then the binding. Binding TriCondition sets
/// delta_c = -delta_m and |phi| = sqrt(delta_m^2 + 2 g1 g2), keeping the sign of phi.
SystemParams apply_overrides(const SystemParams& base, const Overrides& overrides, Binding binding);

/// One point. Occupations are absent past the mean-field threshold; unstable
/// points carry no values at all. Only InvalidArgument propagates.
GridRecord evaluate_point(const SystemParams& base, const Overrides& overrides, Binding binding,
                          const std::vector<Quantity>& quantities);

/// Row-major grid with x fastest. With an inner scan every requested quantity
/// is the maximum over the scanned axis. Output order and bits do not depend on
/// the thread count.
std::vector<GridRecord> map2d(const SweepJob& job);

struct ScanMax {
  double argmax = 0.0;
  double max = 0.0;
};

/// Grid argmax of one quantity; unstable or failed points are skipped, ties keep
/// the lowest index. Throws AllUnstable if nothing is left.
ScanMax max_over_scan(const SystemParams& base, const Axis& scan, Binding binding, Quantity quantity);

/// Names accepted by figure_preset.
const std::vector<std::string_view>& figure_names();

/// Preset for a named figure panel. `steps` overrides both outer axes.
SweepJob figure_preset(std::string_view name, const SystemParams& base,
                       std::optional<int> steps = std::nullopt);

}  // namespace magnon
