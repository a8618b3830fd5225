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

// Two-photon-pumped cavity coupled to two magnon modes: mean-field steady
// state, linearized quadrature drift/diffusion and the analytic conditions
// for photon-magnon entanglement.
//
// All rates are in units of the cavity decay rate unless kappa is changed.
// Quadrature order throughout is (X, Y, x1, y1, x2, y2).

#pragma once

#include "matkernel.hpp"

namespace magnon {

enum class Mode { Cavity = 0, Magnon1 = 1, Magnon2 = 2 };

struct SystemParams {
  double kappa = 1.0;
  double gamma1 = 1.0;
  double gamma2 = 1.0;
  double g1 = 3.2;
  double g2 = 3.2;
  double omega_nl = 0.6;  // two-photon (chi^2) strength
  double eps_p = 1.0;     // probe amplitude
  double delta_c = 0.0;
  double delta_m1 = 0.0;
  double delta_m2 = 0.0;

  /// Mean magnon detuning (delta_m1 + delta_m2) / 2.
  double delta_m() const noexcept { return 0.5 * (delta_m1 + delta_m2); }
  /// Half the magnon frequency difference (delta_m1 - delta_m2) / 2.
  double phi() const noexcept { return 0.5 * (delta_m1 - delta_m2); }
  void set_magnon_detunings(double mean, double half_difference) noexcept {
    delta_m1 = mean + half_difference;
    delta_m2 = mean - half_difference;
  }

  /// Throws InvalidArgument on non-positive decay rates, negative couplings or non-finite values.
  void validate() const;

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// YIG sphere used for the Holstein-Primakoff bound 2Ns.
struct MaterialSpec {
  double spin_density = 4.22e27;  // m^-3
  double diameter = 1e-3;         // m
  double spin = 2.5;

  void validate() const;
  /// N = rho * (pi / 6) * d^3.
  double spin_count() const noexcept;
};

struct SteadyState {
  cplx a;
  cplx m1;
  cplx m2;
  double n_c = 0.0;
  double n_m1 = 0.0;
  double n_m2 = 0.0;
};

struct DriftMatrix {
  Mat value;
};

struct DiffusionMatrix {
  Mat value;
};

struct ConditionResiduals {
  double hyperbola = 0.0;  // delta_c * delta_m - 2 g1 g2
  double antidiag = 0.0;   // delta_c + delta_m
  double tripartite = 0.0; // delta_m^2 - phi^2 + 2 g1 g2
};

/// Mean-field amplitudes from D a + 2 Omega a* = -eps_p with
/// D = (delta_c - i kappa) - sum_j g_j^2 / (delta_mj - i gamma_j) and
/// m_j = -g_j a / (delta_mj - i gamma_j).
/// Throws MeanFieldDivergence at the parametric threshold |D|^2 = 4 Omega^2.
SteadyState steady_state(const SystemParams& p);

DriftMatrix build_drift(const SystemParams& p);
DiffusionMatrix build_diffusion(const SystemParams& p);

/// -max Re(lambda) of the drift; positive means a steady state exists.
double stability_margin(const DriftMatrix& a);

ConditionResiduals condition_residuals(const SystemParams& p) noexcept;

/// max(n_m1, n_m2) / (2 N s). Values well below 1e-3 keep the bosonization valid.
double hp_validity(const SteadyState& s, const MaterialSpec& m) noexcept;

}  // namespace magnon
