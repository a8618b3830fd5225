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

#include "matkernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "error.hpp"

namespace magnon {

namespace {

constexpr double kPivotFloor = 1e-14;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

// In-place LU with partial pivoting on an n*n row-major block, then forward and
// back substitution of `rhs`. Shared by the complex and real entry points.
template <typename T>
void lu_solve_inplace(std::vector<T>& a, std::vector<T>& rhs, std::size_t n, double scale) {
  const double floor = kPivotFloor * scale;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a[k * n + k]);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double mag = std::abs(a[r * n + k]);
      if (mag > best) {
        best = mag;
        piv = r;
      }
    }
    if (!(best >= floor) || best == 0.0) {
      throw Error(ErrorCode::SingularMatrix,
                  "pivot " + std::to_string(best) + " below floor at column " + std::to_string(k));
    }
    if (piv != k) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(k * n),
                       a.begin() + static_cast<std::ptrdiff_t>((k + 1) * n),
                       a.begin() + static_cast<std::ptrdiff_t>(piv * n));
      std::swap(rhs[k], rhs[piv]);
    }
    const T inv = T(1) / a[k * n + k];
    for (std::size_t r = k + 1; r < n; ++r) {
      const T f = a[r * n + k] * inv;
      if (f == T(0)) continue;
      a[r * n + k] = f;
      for (std::size_t c = k + 1; c < n; ++c) a[r * n + c] -= f * a[k * n + c];
      rhs[r] -= f * rhs[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    T s = rhs[k];
    for (std::size_t c = k + 1; c < n; ++c) s -= a[k * n + c] * rhs[c];
    rhs[k] = s / a[k * n + k];
  }
}

template <typename T>
double frobenius(const std::vector<T>& a) {
  double s = 0.0;
  for (const auto& v : a) s += std::norm(v);
  return std::sqrt(s);
}

// Householder reduction to upper Hessenberg form.
void to_hessenberg(Mat& h) {
  const std::size_t n = h.rows();
  std::vector<cplx> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(h(i, k));
    double tail2 = xnorm2 - std::norm(h(k + 1, k));
    if (tail2 == 0.0) continue;
    const double xnorm = std::sqrt(xnorm2);
    const cplx x0 = h(k + 1, k);
    const cplx phase = std::abs(x0) == 0.0 ? cplx(1.0) : x0 / std::abs(x0);
    const cplx alpha = -phase * xnorm;

    std::fill(v.begin(), v.end(), cplx(0.0));
    v[k + 1] = x0 - alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = h(i, k);
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;

    // H <- (I - beta v v^H) H
    for (std::size_t c = 0; c < n; ++c) {
      cplx s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * h(i, c);
      s *= beta;
      for (std::size_t i = k + 1; i < n; ++i) h(i, c) -= v[i] * s;
    }
    // H <- H (I - beta v v^H)
    for (std::size_t r = 0; r < n; ++r) {
      cplx s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += h(r, i) * v[i];
      s *= beta;
      for (std::size_t i = k + 1; i < n; ++i) h(r, i) -= s * std::conj(v[i]);
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

// Eigenvalue of the 2x2 block [[a, b], [c, d]] closest to d.
cplx wilkinson_shift(cplx a, cplx b, cplx c, cplx d) {
  const cplx half = 0.5 * (a - d);
  const cplx disc = std::sqrt(half * half + b * c);
  const cplx mean = 0.5 * (a + d);
  const cplx l1 = mean + disc;
  const cplx l2 = mean - disc;
  return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

// One explicit shifted QR sweep on the active window [lo, hi] of a Hessenberg matrix.
void qr_sweep(Mat& h, std::size_t lo, std::size_t hi, cplx mu, std::vector<cplx>& cs,
              std::vector<cplx>& sn) {
  for (std::size_t i = lo; i <= hi; ++i) h(i, i) -= mu;
  for (std::size_t k = lo; k < hi; ++k) {
    const cplx x = h(k, k);
    const cplx y = h(k + 1, k);
    const double r = std::hypot(std::abs(x), std::abs(y));
    cplx c = 1.0;
    cplx s = 0.0;
    if (r != 0.0) {
      c = x / r;
      s = y / r;
    }
    cs[k] = c;
    sn[k] = s;
    for (std::size_t col = k; col <= hi; ++col) {
      const cplx top = h(k, col);
      const cplx bot = h(k + 1, col);
      h(k, col) = std::conj(c) * top + std::conj(s) * bot;
      h(k + 1, col) = -s * top + c * bot;
    }
  }
  for (std::size_t k = lo; k < hi; ++k) {
    const cplx c = cs[k];
    const cplx s = sn[k];
    const std::size_t last = std::min(k + 1, hi);
    for (std::size_t row = lo; row <= last; ++row) {
      const cplx left = h(row, k);
      const cplx right = h(row, k + 1);
      h(row, k) = left * c + right * s;
      h(row, k + 1) = -left * std::conj(s) + right * std::conj(c);
    }
  }
  for (std::size_t i = lo; i <= hi; ++i) h(i, i) += mu;
}

}  // namespace

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  require(data_.size() == rows_ * cols_, "entry count does not match rows*cols");
}

Mat Mat::real(std::size_t rows, std::size_t cols, std::initializer_list<double> entries) {
  return real(rows, cols, std::span<const double>(entries.begin(), entries.size()));
}

Mat Mat::real(std::size_t rows, std::size_t cols, std::span<const double> entries) {
  require(entries.size() == rows * cols, "entry count does not match rows*cols");
  Mat m(rows, cols);
  std::copy(entries.begin(), entries.end(), m.data_.begin());
  return m;
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::diagonal(std::span<const double> diag) {
  Mat m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Mat Mat::column(std::span<const cplx> values) {
  return Mat(values.size(), 1, std::vector<cplx>(values.begin(), values.end()));
}

bool Mat::is_real() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& z) { return z.imag() == 0.0; });
}

std::vector<double> Mat::real_part() const {
  std::vector<double> out(data_.size());
  std::transform(data_.begin(), data_.end(), out.begin(), [](const cplx& z) { return z.real(); });
  return out;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::conj_transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = std::conj((*this)(r, c));
  return t;
}

double Mat::frobenius_norm() const noexcept { return frobenius(data_); }

double Mat::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

Mat& Mat::operator+=(const Mat& rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Mat& Mat::operator*=(cplx s) noexcept {
  for (auto& z : data_) z *= s;
  return *this;
}

Mat operator*(const Mat& lhs, const Mat& rhs) {
  require(lhs.cols_ == rhs.rows_, "shape mismatch in *");
  Mat out(lhs.rows_, rhs.cols_);
  for (std::size_t r = 0; r < lhs.rows_; ++r)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const cplx a = lhs(r, k);
      if (a == cplx(0.0)) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

Mat solve_linear(const Mat& a, const Mat& b) {
  require(a.is_square(), "solve_linear: matrix must be square");
  require(b.rows() == a.rows() && b.cols() == 1, "solve_linear: right-hand side not conformal");
  const std::size_t n = a.rows();
  std::vector<cplx> lu(a.data().begin(), a.data().end());
  std::vector<cplx> x(b.data().begin(), b.data().end());
  lu_solve_inplace(lu, x, n, a.frobenius_norm());
  return Mat(n, 1, std::move(x));
}

std::vector<double> solve_linear_real(std::span<const double> a, std::span<const double> b,
                                      std::size_t n) {
  require(a.size() == n * n && b.size() == n, "solve_linear_real: shape mismatch");
  std::vector<double> lu(a.begin(), a.end());
  std::vector<double> x(b.begin(), b.end());
  lu_solve_inplace(lu, x, n, frobenius(lu));
  return x;
}

std::vector<cplx> eig_general(const Mat& a) {
  require(a.is_square(), "eig_general: matrix must be square");
  const std::size_t n = a.rows();
  for (const auto& z : a.data())
    require(std::isfinite(z.real()) && std::isfinite(z.imag()), "eig_general: non-finite entry");
  std::vector<cplx> eigs;
  eigs.reserve(n);
  if (n == 0) return eigs;

  Mat h = a;
  to_hessenberg(h);

  const double eps = std::numeric_limits<double>::epsilon();
  const double hnorm = std::max(h.frobenius_norm(), std::numeric_limits<double>::min());
  const std::size_t cap = 100 * n * n;
  std::size_t sweeps = 0;
  std::size_t since_deflation = 0;
  std::vector<cplx> cs(n), sn(n);

  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
  while (hi >= 0) {
    if (hi == 0) {
      eigs.push_back(h(0, 0));
      break;
    }
    std::ptrdiff_t lo = hi;
    while (lo > 0) {
      const auto l = static_cast<std::size_t>(lo);
      double local = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
      if (local == 0.0) local = hnorm;
      if (std::abs(h(l, l - 1)) <= eps * local) {
        h(l, l - 1) = 0.0;
        break;
      }
      --lo;
    }
    const auto uhi = static_cast<std::size_t>(hi);
    if (lo == hi) {
      eigs.push_back(h(uhi, uhi));
      --hi;
      since_deflation = 0;
      continue;
    }
    if (++sweeps > cap) {
      throw Error(ErrorCode::NoConvergence,
                  "QR iteration did not converge after " + std::to_string(cap) + " sweeps");
    }
    cplx mu;
    ++since_deflation;
    if (since_deflation % 11 == 10) {
      // exceptional shift breaks symmetric stalls
      mu = h(uhi, uhi) + 0.75 * std::abs(h(uhi, uhi - 1));
    } else {
      mu = wilkinson_shift(h(uhi - 1, uhi - 1), h(uhi - 1, uhi), h(uhi, uhi - 1), h(uhi, uhi));
    }
    qr_sweep(h, static_cast<std::size_t>(lo), uhi, mu, cs, sn);
  }
  return eigs;
}

double spectral_abscissa(const Mat& a) {
  const auto eigs = eig_general(a);
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& l : eigs) m = std::max(m, l.real());
  return m;
}

Mat solve_lyapunov(const Mat& a, const Mat& q) {
  const double abscissa = spectral_abscissa(a);
  if (!(abscissa < 0.0)) {
    throw Error(ErrorCode::UnstableDrift,
                "drift has eigenvalue with real part " + std::to_string(abscissa));
  }
  return solve_lyapunov_stable(a, q);
}

Mat solve_lyapunov_stable(const Mat& a, const Mat& q) {
  require(a.is_square() && q.is_square() && a.rows() == q.rows(),
          "solve_lyapunov: A and Q must be square and conformal");
  require(a.is_real() && q.is_real(), "solve_lyapunov: A and Q must be real");
  const std::size_t n = a.rows();
  // Row-major vec(V): (A V)_ij = sum_k A_ik V_kj, (V A^T)_ij = sum_k A_jk V_ik.
  const std::size_t m = n * n;
  std::vector<double> kron(m * m, 0.0);
  std::vector<double> rhs(m);
  const auto ar = a.real_part();
  const auto qr = q.real_part();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        kron[row * m + k * n + j] += ar[i * n + k];
        kron[row * m + i * n + k] += ar[j * n + k];
      }
      rhs[row] = -qr[row];
    }
  }
  const auto v = solve_linear_real(kron, rhs, m);

  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = 0.5 * (v[i * n + j] + v[j * n + i]);
  return out;
}

}  // namespace magnon
