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

#include "entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "error.hpp"

namespace magnon {

namespace {

constexpr double kPhysicalityTol = 1e-9;
constexpr double kMonogamyTol = 1e-6;

void require_cm(const Mat& v) {
  if (!v.is_square() || v.rows() % 2 != 0 || v.rows() == 0 || !v.is_real()) {
    throw Error(ErrorCode::InvalidArgument, "covariance matrix must be real, square and even-sized");
  }
}

double det2(const Mat& v, std::size_t r, std::size_t c) {
  return (v(r, c) * v(r + 1, c + 1) - v(r, c + 1) * v(r + 1, c)).real();
}

double det4(const Mat& v) {
  // cofactor expansion is fine at this size
  double det = 0.0;
  for (std::size_t c0 = 0; c0 < 4; ++c0) {
    std::array<std::size_t, 3> cols{};
    for (std::size_t c = 0, k = 0; c < 4; ++c)
      if (c != c0) cols[k++] = c;
    const auto m = [&](std::size_t r, std::size_t k) { return v(r, cols[k]).real(); };
    const double minor = m(1, 0) * (m(2, 1) * m(3, 2) - m(2, 2) * m(3, 1)) -
                         m(1, 1) * (m(2, 0) * m(3, 2) - m(2, 2) * m(3, 0)) +
                         m(1, 2) * (m(2, 0) * m(3, 1) - m(2, 1) * m(3, 0));
    det += ((c0 % 2 == 0) ? 1.0 : -1.0) * v(0, c0).real() * minor;
  }
  return det;
}

double min_abs_eigenvalue_of_iJV(const Mat& v) {
  const Mat m = cplx(0.0, 1.0) * (symplectic_form(v.rows() / 2) * v);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& l : eig_general(m)) best = std::min(best, std::abs(l));
  return best;
}

Mat flip_y(Mat v, std::size_t mode) {
  const std::size_t y = 2 * mode + 1;
  for (std::size_t i = 0; i < v.rows(); ++i) {
    if (i == y) continue;
    v(i, y) = -v(i, y);
    v(y, i) = -v(y, i);
  }
  return v;
}

std::size_t index(Mode m) { return static_cast<std::size_t>(m); }

struct PairNegativities {
  double e01;
  double e02;
  double e12;
};

std::array<double, 3> residuals(const CovarianceMatrix& v, const PairNegativities& e) {
  const double c0 = std::pow(negativity_one_vs_two(v, Mode::Cavity), 2);
  const double c1 = std::pow(negativity_one_vs_two(v, Mode::Magnon1), 2);
  const double c2 = std::pow(negativity_one_vs_two(v, Mode::Magnon2), 2);
  const double s01 = e.e01 * e.e01;
  const double s02 = e.e02 * e.e02;
  const double s12 = e.e12 * e.e12;
  return {c0 - s01 - s02, c1 - s01 - s12, c2 - s02 - s12};
}

double min_of_residuals(const std::array<double, 3>& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < -kMonogamyTol) {
      throw Error(ErrorCode::MonogamyViolation,
                  "residual contangle " + std::to_string(r[i]) + " for mode " + std::to_string(i));
    }
  }
  return std::max(0.0, *std::min_element(r.begin(), r.end()));
}

PairNegativities pair_negativities(const CovarianceMatrix& v) {
  return {log_negativity_pair(reduce_modes(v, Mode::Cavity, Mode::Magnon1)),
          log_negativity_pair(reduce_modes(v, Mode::Cavity, Mode::Magnon2)),
          log_negativity_pair(reduce_modes(v, Mode::Magnon1, Mode::Magnon2))};
}

}  // namespace

Mat symplectic_form(std::size_t modes) {
  Mat j(2 * modes, 2 * modes);
  for (std::size_t k = 0; k < modes; ++k) {
    j(2 * k, 2 * k + 1) = 1.0;
    j(2 * k + 1, 2 * k) = -1.0;
  }
  return j;
}

double min_symplectic_eigenvalue(const Mat& v) {
  require_cm(v);
  return min_abs_eigenvalue_of_iJV(v);
}

double min_pt_symplectic_eigenvalue(const Mat& v, std::size_t mode) {
  require_cm(v);
  if (mode >= v.rows() / 2) throw Error(ErrorCode::InvalidArgument, "mode index out of range");
  return min_abs_eigenvalue_of_iJV(flip_y(v, mode));
}

double min_pt_symplectic_eigenvalue_closed_form(const Mat& v4) {
  require_cm(v4);
  if (v4.rows() != 4) throw Error(ErrorCode::InvalidArgument, "closed form needs a 4x4 CM");
  const double delta = det2(v4, 0, 0) + det2(v4, 2, 2) - 2.0 * det2(v4, 0, 2);
  const double det = det4(v4);
  const double disc = std::max(0.0, delta * delta - 4.0 * det);
  return std::sqrt(std::max(0.0, 0.5 * (delta - std::sqrt(disc))));
}

double negativity_from_symplectic(double nu) noexcept {
  const double e = -std::log(2.0 * nu);
  return e > kNegativityFloor ? e : 0.0;
}

namespace {

CovarianceMatrix checked_physical(CovarianceMatrix v) {
  const double nu = min_symplectic_eigenvalue(v.value);
  if (nu < 0.5 - kPhysicalityTol) {
    throw Error(ErrorCode::PhysicalityViolation,
                "covariance breaks the uncertainty bound: nu_min = " + std::to_string(nu));
  }
  return v;
}

}  // namespace

CovarianceMatrix steady_covariance(const DriftMatrix& a, const DiffusionMatrix& d) {
  return checked_physical(CovarianceMatrix{solve_lyapunov(a.value, d.value)});
}

Mat reduce_modes(const CovarianceMatrix& v, Mode first, Mode second) {
  require_cm(v.value);
  if (first == second) throw Error(ErrorCode::InvalidArgument, "reduce_modes needs two distinct modes");
  const std::array<std::size_t, 4> idx{2 * index(first), 2 * index(first) + 1, 2 * index(second),
                                       2 * index(second) + 1};
  if (idx[3] >= v.value.rows()) throw Error(ErrorCode::InvalidArgument, "mode index out of range");
  Mat out(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out(r, c) = v.value(idx[r], idx[c]);
  return out;
}

double log_negativity_pair(const Mat& v4) {
  if (v4.rows() != 4) throw Error(ErrorCode::InvalidArgument, "log_negativity_pair needs a 4x4 CM");
  return negativity_from_symplectic(min_pt_symplectic_eigenvalue(v4, 0));
}

double negativity_one_vs_two(const CovarianceMatrix& v, Mode singled) {
  if (v.value.rows() != 6) throw Error(ErrorCode::InvalidArgument, "three-mode CM must be 6x6");
  return negativity_from_symplectic(min_pt_symplectic_eigenvalue(v.value, index(singled)));
}

double residual_contangle(const CovarianceMatrix& v, Mode i) {
  return residuals(v, pair_negativities(v))[index(i)];
}

double min_residual_contangle(const CovarianceMatrix& v) {
  return min_of_residuals(residuals(v, pair_negativities(v)));
}

EntanglementReport analyze(const SystemParams& p) {
  const DriftMatrix a = build_drift(p);
  const DiffusionMatrix d = build_diffusion(p);
  EntanglementReport report;
  report.margin = stability_margin(a);
  report.stable = report.margin > 0.0;
  if (!report.stable) return report;

  const CovarianceMatrix v = checked_physical(CovarianceMatrix{solve_lyapunov_stable(a.value, d.value)});
  const PairNegativities e = pair_negativities(v);
  report.e_am1 = e.e01;
  report.e_am2 = e.e02;
  report.e_m1m2 = e.e12;
  report.r_min = min_of_residuals(residuals(v, e));
  return report;
}

}  // namespace magnon
