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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "bridge.hpp"
#include "error.hpp"
#include "model.hpp"

using magnon::ErrorCode;
using magnon::SystemParams;

namespace {

SystemParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> det(-10, 10), rate(0.2, 2), coup(0, 5), nl(0, 1), drive(0.1, 3);
  SystemParams p;
  p.kappa = rate(rng);
  p.gamma1 = rate(rng);
  p.gamma2 = rate(rng);
  p.g1 = coup(rng);
  p.g2 = coup(rng);
  p.omega_nl = nl(rng);
  p.eps_p = drive(rng);
  p.delta_c = det(rng);
  p.delta_m1 = det(rng);
  p.delta_m2 = det(rng);
  return p;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const magnon::Error& e) {
    return e.code();
  }
  FAIL("expected magnon::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("default parameters are the reference set") {
  const SystemParams p;
  CHECK(p.kappa == 1.0);
  CHECK(p.gamma1 == 1.0);
  CHECK(p.gamma2 == 1.0);
  CHECK(p.g1 == 3.2);
  CHECK(p.g2 == 3.2);
  CHECK(p.omega_nl == 0.6);
  CHECK(p.eps_p == 1.0);
}

TEST_CASE("magnon detuning parametrisation round-trips") {
  SystemParams p;
  p.set_magnon_detunings(2.5, -1.5);
  CHECK(p.delta_m1 == 1.0);
  CHECK(p.delta_m2 == 4.0);
  CHECK(p.delta_m() == 2.5);
  CHECK(p.phi() == -1.5);
}

TEST_CASE("invalid parameters are rejected") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (auto mutate : {+[](SystemParams& p) { p.kappa = 0; }, +[](SystemParams& p) { p.gamma1 = -1; },
                      +[](SystemParams& p) { p.g2 = -0.1; }, +[](SystemParams& p) { p.omega_nl = -0.5; },
                      +[](SystemParams& p) { p.delta_c = std::numeric_limits<double>::infinity(); }}) {
    SystemParams p;
    mutate(p);
    CHECK(code_of([&] { p.validate(); }) == ErrorCode::InvalidArgument);
  }
  SystemParams p;
  p.delta_m1 = nan;
  CHECK(code_of([&] { magnon::steady_state(p); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("steady state solves the coupled mean-field equations") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const SystemParams p = random_params(rng);
    const auto ref = oracle::mean_field(p.kappa, p.gamma1, p.gamma2, p.g1, p.g2, p.omega_nl, p.eps_p, p.delta_c,
                                        p.delta_m1, p.delta_m2);
    magnon::SteadyState s;
    try {
      s = magnon::steady_state(p);
    } catch (const magnon::Error& e) {
      CHECK(e.code() == ErrorCode::MeanFieldDivergence);
      continue;
    }
    const double scale = 1.0 + std::abs(ref.a) + std::abs(ref.m1) + std::abs(ref.m2);
    CHECK(std::abs(s.a - ref.a) <= 1e-9 * scale);
    CHECK(std::abs(s.m1 - ref.m1) <= 1e-9 * scale);
    CHECK(std::abs(s.m2 - ref.m2) <= 1e-9 * scale);
    CHECK(s.n_c == doctest::Approx(std::norm(s.a)));
    CHECK(s.n_m1 == doctest::Approx(std::norm(s.m1)));
  }
}

TEST_CASE("mean field scales linearly with the drive") {
  SystemParams p;
  p.delta_c = 3.0;
  p.delta_m1 = p.delta_m2 = 4.0;
  const auto s1 = magnon::steady_state(p);
  p.eps_p = 2.0;
  const auto s2 = magnon::steady_state(p);
  CHECK(std::abs(s2.a - 2.0 * s1.a) < 1e-14);
  CHECK(s2.n_m1 == doctest::Approx(4.0 * s1.n_m1));
}

TEST_CASE("divergent mean field is reported") {
  SystemParams p;
  p.g1 = p.g2 = 0.0;
  p.delta_c = 0.0;
  p.omega_nl = 0.5;  // |D|^2 = kappa^2 = 4 Omega^2
  CHECK(code_of([&] { magnon::steady_state(p); }) == ErrorCode::MeanFieldDivergence);
}

TEST_CASE("drift and diffusion structure") {
  SystemParams p;
  p.delta_c = 2.0;
  p.delta_m1 = -2.0;
  p.delta_m2 = 1.0;
  const auto a = to_dense(magnon::build_drift(p).value);
  // clang-format off
  const oracle::Dense expected{
      -1,    0.8,  0,    3.2,  0,    3.2,
      -3.2,  -1,   -3.2, 0,    -3.2, 0,
      0,     3.2,  -1,   -2,   0,    0,
      -3.2,  0,    2,    -1,   0,    0,
      0,     3.2,  0,    0,    -1,   1,
      -3.2,  0,    0,    0,    -1,   -1,
  };
  // clang-format on
  for (std::size_t i = 0; i < 36; ++i) CHECK(a[i] == doctest::Approx(expected[i]).epsilon(1e-15));

  p.kappa = 0.7;
  p.gamma1 = 0.3;
  p.gamma2 = 1.9;
  const auto d = to_dense(magnon::build_diffusion(p).value);
  const double diag[6] = {0.7, 0.7, 0.3, 0.3, 1.9, 1.9};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(d[i * 6 + j] == (i == j ? diag[i] : 0.0));
}

TEST_CASE("drift trace equals total damping") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const SystemParams p = random_params(rng);
    const auto a = to_dense(magnon::build_drift(p).value);
    double tr = 0.0;
    for (std::size_t i = 0; i < 6; ++i) tr += a[i * 6 + i];
    CHECK(tr == doctest::Approx(-2.0 * (p.kappa + p.gamma1 + p.gamma2)));
  }
}

TEST_CASE("stability margin matches the characteristic polynomial") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const SystemParams p = random_params(rng);
    const auto drift = magnon::build_drift(p);
    const double ref = -oracle::spectral_abscissa(to_dense(drift.value), 6);
    CHECK(magnon::stability_margin(drift) == doctest::Approx(ref).epsilon(1e-6).scale(1.0));
  }
}

TEST_CASE("uncoupled system is stable with margin min decay") {
  SystemParams p;
  p.g1 = p.g2 = p.omega_nl = 0.0;
  p.kappa = 0.8;
  p.gamma1 = 1.3;
  p.gamma2 = 0.5;
  CHECK(magnon::stability_margin(magnon::build_drift(p)) == doctest::Approx(0.5));
}

TEST_CASE("condition residuals") {
  SystemParams p;
  p.delta_c = 4.0;
  p.set_magnon_detunings(2.0, 1.0);
  const auto r = magnon::condition_residuals(p);
  CHECK(r.hyperbola == doctest::Approx(4.0 * 2.0 - 2.0 * 3.2 * 3.2));
  CHECK(r.antidiag == doctest::Approx(6.0));
  CHECK(r.tripartite == doctest::Approx(4.0 - 1.0 + 2.0 * 3.2 * 3.2));
}

TEST_CASE("spin count and Holstein-Primakoff ratio") {
  const magnon::MaterialSpec m;
  CHECK(m.spin_count() == doctest::Approx(4.22e27 * 3.141592653589793 / 6.0 * 1e-9));
  CHECK(m.spin_count() == doctest::Approx(2.2096e18).epsilon(1e-4));
  magnon::SteadyState s;
  s.n_m1 = 1e3;
  s.n_m2 = 2e3;
  CHECK(magnon::hp_validity(s, m) == doctest::Approx(2e3 / (5.0 * m.spin_count())));
}

TEST_CASE("steady state examples") {
  SystemParams p;
  p.g1 = p.g2 = p.omega_nl = p.delta_c = 0.0;
  auto s = magnon::steady_state(p);
  CHECK(std::abs(s.a - magnon::cplx(0, -1)) < 1e-15);
  CHECK(s.n_c == doctest::Approx(1.0));
  CHECK(s.m1 == magnon::cplx(0));
  CHECK(s.m2 == magnon::cplx(0));

  p = SystemParams{};
  p.eps_p = 0.0;
  p.delta_c = 4.0;
  p.delta_m1 = p.delta_m2 = -4.0;
  s = magnon::steady_state(p);
  CHECK(std::abs(s.a) == 0.0);
  CHECK(std::abs(s.m1) == 0.0);
  CHECK(std::abs(s.m2) == 0.0);
}

TEST_CASE("steady state at the hyperbola point matches the real 2x2 system") {
  SystemParams p;
  const double x = std::sqrt(2.0) * 3.2;
  p.delta_c = x;
  p.delta_m1 = p.delta_m2 = x;
  const magnon::cplx dm(x, -1.0);
  const magnon::cplx d = magnon::cplx(x, -1.0) - 2.0 * 3.2 * 3.2 / dm;
  const magnon::cplx a = oracle::cavity_amplitude(d, 0.6, 1.0);
  const auto s = magnon::steady_state(p);
  CHECK(std::abs(s.a - a) < 1e-12);
  CHECK(std::abs(s.m1 - (-3.2 * a / dm)) < 1e-12);
  CHECK(s.m1 == s.m2);
}

TEST_CASE("symmetric steady state matches the reduced closed form") {
  std::mt19937_64 rng(89);
  std::uniform_real_distribution<double> det(-10, 10), coup(0, 5), nl(0, 1), drive(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    SystemParams p;
    p.g1 = p.g2 = coup(rng);
    p.omega_nl = nl(rng);
    p.eps_p = drive(rng);
    p.delta_c = det(rng);
    p.delta_m1 = p.delta_m2 = det(rng);
    const magnon::cplx dm(p.delta_m1, -p.gamma1);
    const magnon::cplx d0 = magnon::cplx(p.delta_c, -p.kappa) - 2.0 * p.g1 * p.g1 / dm;
    const double den = std::norm(d0) - 4.0 * p.omega_nl * p.omega_nl;
    if (std::abs(den) < 1e-6) continue;
    const magnon::cplx a = -p.eps_p * (std::conj(d0) - 2.0 * p.omega_nl) / den;
    const auto s = magnon::steady_state(p);
    CHECK(s.m1 == s.m2);
    CHECK(std::abs(s.a - a) <= 1e-12 * (1.0 + std::abs(a)));
    // Residual of the coupled equations.
    const magnon::cplx r_cav = magnon::cplx(p.delta_c, -p.kappa) * s.a + 2.0 * p.omega_nl * std::conj(s.a) +
                               p.g1 * s.m1 + p.g2 * s.m2 + p.eps_p;
    const magnon::cplx r_mag = dm * s.m1 + p.g1 * s.a;
    CHECK(std::abs(r_cav) <= 1e-10 * std::max(p.eps_p, 1e-300) + 1e-300);
    CHECK(std::abs(r_mag) <= 1e-10 * std::max(p.eps_p, 1e-300) + 1e-300);
  }
}

TEST_CASE("without nonlinearity the cavity responds linearly") {
  SystemParams p;
  p.omega_nl = 0.0;
  p.delta_c = 1.5;
  p.delta_m1 = -0.5;
  p.delta_m2 = 2.5;
  p.g2 = 1.1;
  const magnon::cplx d = magnon::cplx(1.5, -1.0) - p.g1 * p.g1 / magnon::cplx(-0.5, -1.0) -
                         p.g2 * p.g2 / magnon::cplx(2.5, -1.0);
  CHECK(std::abs(magnon::steady_state(p).a - (-p.eps_p / d)) < 1e-14);
}

TEST_CASE("drift examples and symmetries") {
  SystemParams p;
  p.g1 = p.g2 = p.omega_nl = 0.0;
  CHECK(magnon::build_drift(p).value == -1.0 * magnon::Mat::identity(6));

  // Swapping the magnon blocks commutes with the drift for symmetric parameters.
  p = SystemParams{};
  p.delta_c = 1.7;
  p.delta_m1 = p.delta_m2 = -2.3;
  magnon::Mat swap = magnon::Mat::zeros(6, 6);
  const std::size_t perm[6] = {0, 1, 4, 5, 2, 3};
  for (std::size_t i = 0; i < 6; ++i) swap(i, perm[i]) = 1.0;
  const magnon::Mat a = magnon::build_drift(p).value;
  CHECK(swap * a == a * swap);

  // The probe never enters the drift.
  const auto before = magnon::build_drift(p).value;
  p.eps_p = 7.0;
  CHECK(magnon::build_drift(p).value == before);
}

TEST_CASE("diffusion examples") {
  SystemParams p;
  CHECK(magnon::build_diffusion(p).value == magnon::Mat::identity(6));
  p.kappa = 2;
  p.gamma1 = 3;
  p.gamma2 = 5;
  const double d[6] = {2, 2, 3, 3, 5, 5};
  CHECK(magnon::build_diffusion(p).value == magnon::Mat::diagonal(d));
}

TEST_CASE("stability margin examples") {
  CHECK(magnon::stability_margin({-1.0 * magnon::Mat::identity(6)}) == doctest::Approx(1.0));
  SystemParams p;
  p.g1 = p.g2 = 0.0;
  p.delta_c = 0.0;
  for (double w : {0.2, 0.5, 0.7, 1.3}) {
    p.omega_nl = w;
    const double margin = magnon::stability_margin(magnon::build_drift(p));
    // Cavity block eigenvalues -k +- 2W; magnons decay at rate 1.
    CHECK(margin == doctest::Approx(std::min(1.0, 1.0 - 2 * w)).scale(1.0));
    if (w > 0.5) CHECK(margin <= 0.0);
  }
  p = SystemParams{};
  p.delta_c = 5.0;
  p.delta_m1 = p.delta_m2 = -5.0;
  const auto drift = magnon::build_drift(p);
  CHECK(magnon::stability_margin(drift) ==
        doctest::Approx(-oracle::spectral_abscissa(to_dense(drift.value), 6)).epsilon(1e-9));
}

TEST_CASE("condition residual examples") {
  SystemParams p;
  const double x = std::sqrt(2.0) * 3.2;
  p.delta_c = x;
  p.delta_m1 = p.delta_m2 = x;
  CHECK(magnon::condition_residuals(p).hyperbola == doctest::Approx(0.0).scale(1.0));
  p.delta_c = -x;
  CHECK(magnon::condition_residuals(p).antidiag == 0.0);
  const double dm = 1.5;
  p.set_magnon_detunings(dm, std::sqrt(dm * dm + 2 * 3.2 * 3.2));
  CHECK(magnon::condition_residuals(p).tripartite == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("Holstein-Primakoff examples") {
  const magnon::MaterialSpec m;
  magnon::SteadyState s;
  CHECK(magnon::hp_validity(s, m) == 0.0);
  s.n_m1 = s.n_m2 = 1e3;
  CHECK(magnon::hp_validity(s, m) == doctest::Approx(1e3 / 1.1048e19).epsilon(1e-3));
  s.n_m1 = 2.0 * m.spin_count() * m.spin;
  CHECK(magnon::hp_validity(s, m) == doctest::Approx(1.0));
}
