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

#include "model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "error.hpp"

namespace magnon {

namespace {

void check(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

}  // namespace

void SystemParams::validate() const {
  const std::array<double, 10> all{kappa, gamma1, gamma2, g1,       g2,
                                   omega_nl, eps_p, delta_c, delta_m1, delta_m2};
  check(std::all_of(all.begin(), all.end(), [](double v) { return std::isfinite(v); }),
        "parameters must be finite");
  check(kappa > 0.0, "kappa must be > 0");
  check(gamma1 > 0.0 && gamma2 > 0.0, "magnon decay rates must be > 0");
  check(g1 >= 0.0 && g2 >= 0.0, "couplings must be >= 0");
  check(omega_nl >= 0.0, "omega_nl must be >= 0");
  check(eps_p >= 0.0, "eps_p must be >= 0");
}

void MaterialSpec::validate() const {
  check(spin_density > 0.0 && diameter > 0.0 && spin > 0.0,
        "material spin density, diameter and spin must be > 0");
}

double MaterialSpec::spin_count() const noexcept {
  return spin_density * (std::numbers::pi / 6.0) * diameter * diameter * diameter;
}

SteadyState steady_state(const SystemParams& p) {
  p.validate();
  const cplx delta_c(p.delta_c, -p.kappa);
  const cplx delta_m1(p.delta_m1, -p.gamma1);
  const cplx delta_m2(p.delta_m2, -p.gamma2);
  const cplx d = delta_c - p.g1 * p.g1 / delta_m1 - p.g2 * p.g2 / delta_m2;

  const double denom = std::norm(d) - 4.0 * p.omega_nl * p.omega_nl;
  if (!(std::abs(denom) > 1e-12)) {
    throw Error(ErrorCode::MeanFieldDivergence,
                "mean field diverges: |D|^2 - 4 Omega^2 = " + std::to_string(denom));
  }

  SteadyState s;
  s.a = -p.eps_p * (std::conj(d) - 2.0 * p.omega_nl) / denom;
  s.m1 = -p.g1 * s.a / delta_m1;
  s.m2 = -p.g2 * s.a / delta_m2;
  s.n_c = std::norm(s.a);
  s.n_m1 = std::norm(s.m1);
  s.n_m2 = std::norm(s.m2);
  return s;
}

DriftMatrix build_drift(const SystemParams& p) {
  p.validate();
  const double k = p.kappa;
  const double dc = p.delta_c;
  const double w = 2.0 * p.omega_nl;
  const double g1 = p.g1;
  const double g2 = p.g2;
  const double y1 = p.gamma1;
  const double y2 = p.gamma2;
  const double d1 = p.delta_m1;
  const double d2 = p.delta_m2;
  // clang-format off
  return {Mat::real(6, 6, {
      -k,       dc - w,  0.0,  g1,   0.0,  g2,
      -dc - w,  -k,      -g1,  0.0,  -g2,  0.0,
      0.0,      g1,      -y1,  d1,   0.0,  0.0,
      -g1,      0.0,     -d1,  -y1,  0.0,  0.0,
      0.0,      g2,      0.0,  0.0,  -y2,  d2,
      -g2,      0.0,     0.0,  0.0,  -d2,  -y2,
  })};
  // clang-format on
}

DiffusionMatrix build_diffusion(const SystemParams& p) {
  p.validate();
  const std::array<double, 6> diag{p.kappa, p.kappa, p.gamma1, p.gamma1, p.gamma2, p.gamma2};
  return {Mat::diagonal(diag)};
}

double stability_margin(const DriftMatrix& a) { return -spectral_abscissa(a.value); }

ConditionResiduals condition_residuals(const SystemParams& p) noexcept {
  const double g2 = p.g1 * p.g2;
  const double dm = p.delta_m();
  const double phi = p.phi();
  return {p.delta_c * dm - 2.0 * g2, p.delta_c + dm, dm * dm - phi * phi + 2.0 * g2};
}

double hp_validity(const SteadyState& s, const MaterialSpec& m) noexcept {
  return std::max(s.n_m1, s.n_m2) / (2.0 * m.spin_count() * m.spin);
}

}  // namespace magnon
