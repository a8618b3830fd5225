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

// Independent reference implementations used by the tests. Nothing here calls
// into the library; dense matrices are plain row-major vectors.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Dense = std::vector<double>;
using cplx = std::complex<double>;

inline Dense matmul(const Dense& a, const Dense& b, std::size_t n) {
  Dense c(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
  return c;
}

inline Dense transpose(const Dense& a, std::size_t n) {
  Dense t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j * n + i] = a[i * n + j];
  return t;
}

inline double frobenius(const Dense& a) {
  return std::sqrt(std::inner_product(a.begin(), a.end(), a.begin(), 0.0));
}

/// ||A V + V A^T + D||_F.
inline double lyapunov_residual(const Dense& a, const Dense& v, const Dense& d, std::size_t n) {
  Dense av = matmul(a, v, n);
  Dense vat = matmul(v, transpose(a, n), n);
  for (std::size_t i = 0; i < n * n; ++i) av[i] += vat[i] + d[i];
  return frobenius(av);
}

/// Gaussian elimination with partial pivoting on a small dense system.
inline std::vector<double> gauss_solve(Dense a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i * n + k]) > std::abs(a[p * n + k])) p = i;
    for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
    std::swap(b[k], b[p]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] / a[k * n + k];
      for (std::size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
      b[i] -= f * b[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a[i * n + j] * x[j];
    x[i] = acc / a[i * n + i];
  }
  return x;
}

/// Determinant by permutation expansion; only for n <= 6.
template <typename T>
T leibniz_det(const std::vector<T>& a, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total = 0.0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    T term = inversions % 2 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) term *= a[i * n + perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// |det(A - z I)| for a real matrix and complex shift.
inline double shifted_det(const Dense& a, std::size_t n, cplx z) {
  std::vector<cplx> m(a.begin(), a.end());
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] -= z;
  return std::abs(leibniz_det(m, n));
}

/// Closed-form steady covariance of a single degenerate parametric amplifier
/// at zero detuning: drift [[-k, -w], [-w, -k]], diffusion k I.
inline Dense dpa_covariance(double k, double w) {
  const double plus = k / (2 * (k + w));   // along (1, 1)
  const double minus = k / (2 * (k - w));  // along (1, -1)
  return {(plus + minus) / 2, (plus - minus) / 2, (plus - minus) / 2, (plus + minus) / 2};
}

/// Cavity amplitude from the 2x2 real system for (Re a, Im a) of
/// D a + 2 W conj(a) = -eps, given the complex self-energy D.
inline cplx cavity_amplitude(cplx d, double w, double eps) {
  const auto x = gauss_solve({d.real() + 2 * w, -d.imag(), d.imag(), d.real() - 2 * w}, {-eps, 0.0});
  return {x[0], x[1]};
}

/// Characteristic polynomial coefficients c[0..n] of det(zI - A), c[0] = 1,
/// via the Faddeev-LeVerrier recursion.
inline std::vector<double> char_poly(const Dense& a, std::size_t n) {
  std::vector<double> c(n + 1, 0.0);
  c[0] = 1.0;
  Dense m(n * n, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] += c[k - 1];
    Dense am = matmul(a, m, n);
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i * n + i];
    c[k] = -tr / static_cast<double>(k);
    m = std::move(am);
  }
  return c;
}

/// All roots of a monic polynomial by Durand-Kerner iteration.
inline std::vector<cplx> poly_roots(const std::vector<double>& c) {
  const std::size_t n = c.size() - 1;
  double radius = 0.0;
  for (std::size_t i = 1; i <= n; ++i) radius = std::max(radius, std::abs(c[i]));
  radius += 1.0;
  std::vector<cplx> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = radius * std::pow(cplx(0.4, 0.9), static_cast<double>(i));
  const auto eval = [&](cplx x) {
    cplx acc = 1.0;
    for (std::size_t i = 1; i <= n; ++i) acc = acc * x + c[i];
    return acc;
  };
  for (int iter = 0; iter < 5000; ++iter) {
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cplx den = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      const cplx step = eval(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15 * radius) break;
  }
  return z;
}

/// max Re(lambda) from the characteristic polynomial.
inline double spectral_abscissa(const Dense& a, std::size_t n) {
  double best = -INFINITY;
  for (cplx z : poly_roots(char_poly(a, n))) best = std::max(best, z.real());
  return best;
}

/// Integrates dV/dt = A V + V A^T + D from V = 0 with classical RK4 until t_end.
inline Dense rk4_lyapunov(const Dense& a, const Dense& d, std::size_t n, double t_end, double h) {
  const Dense at = transpose(a, n);
  const auto rhs = [&](const Dense& v) {
    Dense av = matmul(a, v, n);
    Dense vat = matmul(v, at, n);
    for (std::size_t i = 0; i < n * n; ++i) av[i] += vat[i] + d[i];
    return av;
  };
  Dense v(n * n, 0.0), tmp(n * n);
  const auto steps = static_cast<long>(std::ceil(t_end / h));
  for (long s = 0; s < steps; ++s) {
    const Dense k1 = rhs(v);
    for (std::size_t i = 0; i < n * n; ++i) tmp[i] = v[i] + 0.5 * h * k1[i];
    const Dense k2 = rhs(tmp);
    for (std::size_t i = 0; i < n * n; ++i) tmp[i] = v[i] + 0.5 * h * k2[i];
    const Dense k3 = rhs(tmp);
    for (std::size_t i = 0; i < n * n; ++i) tmp[i] = v[i] + h * k3[i];
    const Dense k4 = rhs(tmp);
    for (std::size_t i = 0; i < n * n; ++i) v[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  }
  return v;
}

/// Random matrix with entries in [-1, 1], shifted so every Gershgorin disc sits
/// left of -margin. Returns the matrix; the decay rate is at least `margin`.
inline Dense random_stable(std::mt19937_64& rng, std::size_t n, double margin) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Dense a(n * n);
  for (double& x : a) x = u(rng);
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) radius += std::abs(a[i * n + j]);
    a[i * n + i] = -(radius + margin + 0.5 * (u(rng) + 1.0));
  }
  return a;
}

/// Random symmetric positive-definite matrix B B^T + 0.1 I.
inline Dense random_spd(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Dense b(n * n);
  for (double& x : b) x = u(rng);
  Dense d = matmul(b, transpose(b, n), n);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] += 0.1;
  return d;
}

/// Smallest symplectic eigenvalue of a 2n x 2n covariance after transposing
/// `flip` (or none if flip >= n), from the roots +-i nu of det(z - J V).
inline double symplectic_min_charpoly(Dense v, std::size_t modes, std::size_t flip) {
  const std::size_t d = 2 * modes;
  if (flip < modes) {
    const std::size_t y = 2 * flip + 1;
    for (std::size_t k = 0; k < d; ++k) {
      if (k != y) {
        v[y * d + k] = -v[y * d + k];
        v[k * d + y] = -v[k * d + y];
      }
    }
  }
  Dense jv(d * d, 0.0);
  for (std::size_t m = 0; m < modes; ++m)
    for (std::size_t c = 0; c < d; ++c) {
      jv[(2 * m) * d + c] = v[(2 * m + 1) * d + c];
      jv[(2 * m + 1) * d + c] = -v[(2 * m) * d + c];
    }
  double best = INFINITY;
  for (cplx z : poly_roots(char_poly(jv, d))) best = std::min(best, std::abs(z));
  return best;
}

/// Symplectic building blocks on a two-mode (x1, p1, x2, p2) space.
inline Dense rotation(double t1, double t2) {
  const double c1 = std::cos(t1), s1 = std::sin(t1), c2 = std::cos(t2), s2 = std::sin(t2);
  return {c1, s1, 0, 0, -s1, c1, 0, 0, 0, 0, c2, s2, 0, 0, -s2, c2};
}
inline Dense local_squeeze(double r1, double r2) {
  return {std::exp(-r1), 0, 0, 0, 0, std::exp(r1), 0, 0, 0, 0, std::exp(-r2), 0, 0, 0, 0, std::exp(r2)};
}
inline Dense beam_splitter(double t) {
  const double c = std::cos(t), s = std::sin(t);
  return {c, 0, s, 0, 0, c, 0, s, -s, 0, c, 0, 0, -s, 0, c};
}
inline Dense two_mode_squeeze(double r) {
  const double c = std::cosh(r), s = std::sinh(r);
  return {c, 0, s, 0, 0, c, 0, -s, s, 0, c, 0, 0, -s, 0, c};
}

/// Covariance of a two-mode squeezed vacuum (vacuum variance 1/2).
inline Dense tmsv(double r) {
  const double c = std::cosh(2 * r) / 2, s = std::sinh(2 * r) / 2;
  return {c, 0, s, 0, 0, c, 0, -s, s, 0, c, 0, 0, -s, 0, c};
}

/// Random physical two-mode covariance: S (thermal) S^T with a random symplectic S.
inline Dense random_two_mode_cm(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> sq(-0.8, 0.8);
  std::uniform_real_distribution<double> thermal(0.5, 2.0);
  const double n1 = thermal(rng), n2 = thermal(rng);
  const Dense th{n1, 0, 0, 0, 0, n1, 0, 0, 0, 0, n2, 0, 0, 0, 0, n2};
  Dense s = rotation(angle(rng), angle(rng));
  s = matmul(local_squeeze(sq(rng), sq(rng)), s, 4);
  s = matmul(beam_splitter(angle(rng)), s, 4);
  s = matmul(two_mode_squeeze(sq(rng)), s, 4);
  s = matmul(rotation(angle(rng), angle(rng)), s, 4);
  return matmul(matmul(s, th, 4), transpose(s, 4), 4);
}

struct MeanField {
  cplx a, m1, m2;
};

/// Mean field from the full real 6x6 system of the three coupled equations
///   (dc - i k) a + 2 W conj(a) + g1 m1 + g2 m2 = -eps,
///   (dmj - i yj) mj + gj a = 0,
/// unknowns ordered (Re a, Im a, Re m1, Im m1, Re m2, Im m2).
inline MeanField mean_field(double k, double y1, double y2, double g1, double g2, double w, double eps,
                            double dc, double d1, double d2) {
  // clang-format off
  const Dense m{
      dc + 2 * w, k,          g1,  0,   g2,  0,
      -k,         dc - 2 * w, 0,   g1,  0,   g2,
      g1,         0,          d1,  y1,  0,   0,
      0,          g1,         -y1, d1,  0,   0,
      g2,         0,          0,   0,   d2,  y2,
      0,          g2,         0,   0,   -y2, d2,
  };
  // clang-format on
  const auto x = gauss_solve(m, {-eps, 0, 0, 0, 0, 0});
  return {{x[0], x[1]}, {x[2], x[3]}, {x[4], x[5]}};
}

/// Simon's criterion route: smallest partially transposed symplectic eigenvalue
/// of a 4x4 two-mode covariance, from 2x2 block determinants computed by Leibniz.
inline double pt_nu_from_invariants(const Dense& v) {
  const auto block = [&](std::size_t r, std::size_t c) {
    return Dense{v[r * 4 + c], v[r * 4 + c + 1], v[(r + 1) * 4 + c], v[(r + 1) * 4 + c + 1]};
  };
  const double da = leibniz_det(block(0, 0), 2);
  const double db = leibniz_det(block(2, 2), 2);
  const double dc = leibniz_det(block(0, 2), 2);
  const double dv = leibniz_det(v, 4);
  const double sigma = da + db - 2 * dc;
  return std::sqrt((sigma - std::sqrt(std::max(0.0, sigma * sigma - 4 * dv))) / 2);
}

}  // namespace oracle
