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

// Small dense linear algebra: partial-pivoting LU solves, a complex
// Hessenberg/QR eigenvalue routine and a Kronecker-form Lyapunov solver.
// Sized for the 4x4..36x36 matrices of the three-mode covariance problem.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace magnon {

using cplx = std::complex<double>;

/// Dense row-major complex matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<cplx> data);

  /// Row-major real entries, e.g. Mat::real(2, 2, {0, 1, -1, 0}).
  static Mat real(std::size_t rows, std::size_t cols, std::initializer_list<double> entries);
  static Mat real(std::size_t rows, std::size_t cols, std::span<const double> entries);
  static Mat identity(std::size_t n);
  static Mat zeros(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat diagonal(std::span<const double> diag);
  static Mat column(std::span<const cplx> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }

  /// All imaginary parts exactly zero.
  bool is_real() const noexcept;
  /// Real parts, row-major.
  std::vector<double> real_part() const;

  Mat transpose() const;
  Mat conj_transpose() const;

  double frobenius_norm() const noexcept;
  double max_abs() const noexcept;

  Mat& operator+=(const Mat& rhs);
  Mat& operator-=(const Mat& rhs);
  Mat& operator*=(cplx s) noexcept;

  friend Mat operator+(Mat lhs, const Mat& rhs) { return lhs += rhs; }
  friend Mat operator-(Mat lhs, const Mat& rhs) { return lhs -= rhs; }
  friend Mat operator*(Mat lhs, cplx s) { return lhs *= s; }
  friend Mat operator*(cplx s, Mat rhs) { return rhs *= s; }
  friend Mat operator*(const Mat& lhs, const Mat& rhs);

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// Solve A x = b with partial pivoting. Throws SingularMatrix when a pivot
/// falls below 1e-14 * ||A||_F.
Mat solve_linear(const Mat& a, const Mat& b);

/// Real-valued counterpart used on the hot Lyapunov path. `a` is n*n row-major.
std::vector<double> solve_linear_real(std::span<const double> a, std::span<const double> b,
                                      std::size_t n);

/// Eigenvalues with multiplicity, unordered. Hessenberg reduction followed by
/// Wilkinson-shifted complex QR sweeps; throws NoConvergence after 100 n^2 sweeps.
std::vector<cplx> eig_general(const Mat& a);

/// Solves A V + V A^T = -Q for real A with spectrum in the open left half-plane.
/// Throws UnstableDrift otherwise. Returned V is symmetrized.
Mat solve_lyapunov(const Mat& a, const Mat& q);

/// solve_lyapunov for callers that have already established stability.
Mat solve_lyapunov_stable(const Mat& a, const Mat& q);

/// max Re(lambda) over eig_general(a).
double spectral_abscissa(const Mat& a);

}  // namespace magnon
