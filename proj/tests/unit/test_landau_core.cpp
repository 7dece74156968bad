#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "landau/landau_core.hpp"

using namespace landau;
using std::numbers::pi;

TEST_CASE("psi closed form") {
  CHECK(psi(LandauParam(2.0), PolarAngle(0.0)) == 0.0);
  CHECK(psi(LandauParam(2.0), PolarAngle(pi / 2)) == doctest::Approx(1.0));
  CHECK(std::abs(psi(LandauParam(1.5), PolarAngle(pi))) < 1e-15);
}

TEST_CASE("d_a_psi values and finite-difference cross-check") {
  CHECK(d_a_psi(LandauParam(2.0), PolarAngle(pi / 2)) == doctest::Approx(-0.5));
  CHECK(d_a_psi(LandauParam(2.0), PolarAngle(0.0)) == 0.0);

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ua(1.05, 10.0), uphi(0.1, pi - 0.1);
  for (int t = 0; t < 50; ++t) {
    const double a = ua(rng), phi = uphi(rng);
    const double h = 1e-6;
    const double fd = (psi(LandauParam(a + h), PolarAngle(phi)) -
                       psi(LandauParam(a - h), PolarAngle(phi))) /
                      (2 * h);
    const double exact = d_a_psi(LandauParam(a), PolarAngle(phi));
    CHECK(std::abs(fd - exact) <= 1e-8 * std::abs(exact));
  }
}

TEST_CASE("u_tilde values and large-a decay") {
  auto [ut, up] = u_tilde(LandauParam(2.0), PolarAngle(pi / 2));
  CHECK(ut == doctest::Approx(-0.5));
  CHECK(up == doctest::Approx(-1.0));
  auto [ut0, up0] = u_tilde(LandauParam(2.0), PolarAngle(0.0));
  CHECK(ut0 == doctest::Approx(4.0));
  CHECK(up0 == 0.0);
  for (double phi : {0.3, 1.0, 2.5}) {
    auto [t, p] = u_tilde(LandauParam(1e6), PolarAngle(phi));
    CHECK(std::abs(t) < 1e-5);
    CHECK(std::abs(p) < 1e-5);
  }
}

TEST_CASE("a_psi values") {
  CHECK(a_psi(LandauParam(2.0), PolarAngle(pi / 2)) == doctest::Approx(1.5));
  CHECK(a_psi(LandauParam(2.0), PolarAngle(0.0)) == 0.0);
}

TEST_CASE("beta0 monotone, endpoints") {
  // strictly decreasing over a log grid
  double prev = beta0(LandauParam(1.001));
  for (double a = 1.001 * 1.9; a < 1e6; a *= 1.9) {
    const double cur = beta0(LandauParam(a));
    CHECK(cur < prev);
    prev = cur;
  }
  // ~ 16 pi / a for large a
  for (double a : {1e3, 1e4}) {
    const double asym = 16.0 * pi / a;
    CHECK(beta0(LandauParam(a)) == doctest::Approx(asym).epsilon(1e-2));
  }
  CHECK(beta0(LandauParam(1.0 + 1e-6)) > 1e3);
}

TEST_CASE("f0 and h0: endpoints, kernel ODE, relation to d_a_psi") {
  for (double a : {1.01, 1.1, 2.0, 10.0}) {
    LandauParam lp(a);
    CHECK(f0(lp, 1.0) == 0.0);
    CHECK(f0(lp, -1.0) == 0.0);
    CHECK(h0(lp, 1.0) == 0.0);
    CHECK(h0(lp, -1.0) == 0.0);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uz(-1.0, 1.0);
    for (int t = 0; t < 1000; ++t) {
      const double z = uz(rng);
      const double d = a - z;
      // analytic H0' for the residual of (1-z^2) H' + 2 z H - f0 H = 0
      const double h0p = 4.0 * z / (d * d) - 4.0 * (1.0 - z * z) / (d * d * d);
      const double res = (1.0 - z * z) * h0p + 2.0 * z * h0(lp, z) -
                         f0(lp, z) * h0(lp, z);
      CHECK(std::abs(res) < 1e-12);
    }
  }
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uphi(0.0, pi);
  for (int t = 0; t < 100; ++t) {
    const double phi = uphi(rng);
    const LandauParam lp(1.7);
    CHECK(h0(lp, std::cos(phi)) ==
          doctest::Approx(std::sin(phi) * d_a_psi(lp, PolarAngle(phi)))
              .epsilon(1e-12));
  }
}

TEST_CASE("sign properties on the open interval") {
  for (double a : {1.01, 1.5, 4.0}) {
    for (double phi = 0.05; phi < pi; phi += 0.1) {
      CHECK(psi(LandauParam(a), PolarAngle(phi)) > 0.0);
      CHECK(d_a_psi(LandauParam(a), PolarAngle(phi)) < 0.0);
      CHECK(a_psi(LandauParam(a), PolarAngle(phi)) > 0.0);
    }
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(LandauParam(1.0), std::invalid_argument);
  CHECK_THROWS_AS(LandauParam(0.5), std::invalid_argument);
  CHECK_THROWS_AS(PolarAngle(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(PolarAngle(3.2), std::invalid_argument);
  CHECK_THROWS_AS(f0(LandauParam(2.0), 1.5), std::invalid_argument);
}
