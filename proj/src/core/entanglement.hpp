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

// Gaussian entanglement measures on the steady-state covariance matrix.
//
// Conventions: vacuum variance 1/2, symplectic form J = [[0, 1], [-1, 0]] per
// mode, partial transpose = sign flip of the Y quadrature of one mode. The
// symplectic spectrum is read off the +/- paired eigenvalues of i J V.

#pragma once

#include <array>

#include "matkernel.hpp"
#include "model.hpp"

namespace magnon {

/// 6x6 real symmetric covariance matrix, quadrature order (X, Y, x1, y1, x2, y2).
struct CovarianceMatrix {
  Mat value;
};

struct EntanglementReport {
  double e_am1 = 0.0;
  double e_am2 = 0.0;
  double e_m1m2 = 0.0;
  double r_min = 0.0;
  bool stable = false;
  double margin = 0.0;
};

/// Negativities below this are reported as exactly zero (round-off around 2 nu = 1).
inline constexpr double kNegativityFloor = 1e-12;

/// J_n = (+) [[0, 1], [-1, 0]] over n modes.
Mat symplectic_form(std::size_t modes);

/// Smallest |eigenvalue| of i J V for a 2n x 2n covariance matrix.
double min_symplectic_eigenvalue(const Mat& v);

/// Same spectrum after flipping the Y sign of `mode`.
double min_pt_symplectic_eigenvalue(const Mat& v, std::size_t mode);

/// Closed form of the smallest partially transposed symplectic eigenvalue of a
/// two-mode CM [[A, C], [C^T, B]]: nu^2 = (D - sqrt(D^2 - 4 det V)) / 2 with
/// D = det A + det B - 2 det C.
double min_pt_symplectic_eigenvalue_closed_form(const Mat& v4);

/// max(0, -ln 2 nu) with the kNegativityFloor cut.
double negativity_from_symplectic(double nu) noexcept;

/// Solves A V + V A^T = -D. Throws UnstableDrift, or PhysicalityViolation when
/// the result breaks the uncertainty bound by more than 1e-9.
CovarianceMatrix steady_covariance(const DriftMatrix& a, const DiffusionMatrix& d);

/// 4x4 covariance of modes (first, second), blocks kept in the given order.
Mat reduce_modes(const CovarianceMatrix& v, Mode first, Mode second);

double log_negativity_pair(const Mat& v4);
double negativity_one_vs_two(const CovarianceMatrix& v, Mode singled);

/// C_{i|jk} - C_{i|j} - C_{i|k} with contangle = squared log-negativity.
double residual_contangle(const CovarianceMatrix& v, Mode i);

/// Minimum of the three residual contangles. Throws MonogamyViolation if any
/// is below -1e-6; small negative round-off is floored at zero.
double min_residual_contangle(const CovarianceMatrix& v);

/// Drift, diffusion, stability and all four measures for one parameter point.
/// Unstable points come back with stable=false and zero measures.
EntanglementReport analyze(const SystemParams& p);

}  // namespace magnon
