#include <algorithm>
#include <cmath>
#include <complex>

#include "doctest.h"
#include "landau/eigensolve.hpp"

using namespace landau;
using cplx = std::complex<double>;

TEST_CASE("Gegenbauer oracle: smallest eigenvalues of A0 are k(k+1)") {
  const Params p(2.0, 0.0, 0, 640);
  const Grid g(p);
  const SpectralReport rep = spectrum_reduced(assemble_A(p, g), false);
  const double expect[4] = {2.0, 6.0, 12.0, 20.0};
  for (int k = 0; k < 4; ++k)
    CHECK(rep.eigenvalues[k].real() ==
          doctest::Approx(expect[k]).epsilon(5e-4));
}

TEST_CASE("zero-mode stream spectrum diagnostics at a reference point") {
  const Params p(2.0, 0.0, 0, 640);
  const Grid g(p);
  const SpectralReport rep = spectrum_reduced(assemble_L(p, g), true);
  CHECK(rep.min_real == doctest::Approx(-1.6395e-04).epsilon(0.10));
  CHECK(rep.second_min_real == doctest::Approx(23.0465).epsilon(0.005));
  CHECK(rep.max_abs_imag == 0.0);
  CHECK(second_min_real(rep) == rep.second_min_real);
  // the kernel eigenvector tracks d_a_psi
  CHECK(cosine_angle(rep.min_real_vector, d_a_psi_samples(2.0, g)) > 0.9999);
  // min_real <= second_min_real
  CHECK(rep.min_real <= rep.second_min_real);
}

TEST_CASE("swirl operator at large a approaches the first Gegenbauer level") {
  const Params p(1e6, 1.0, 0, 320);
  const Grid g(p);
  const SpectralReport rep = spectrum_reduced(assemble_M(p, g), false);
  CHECK(rep.min_real == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("generalized pencil agrees with the reduced solve") {
  const Params p(2.0, 1.0, 1, 100);
  const Grid g(p);
  const SpectralReport red = spectrum_reduced(assemble_L(p, g), false);
  const SpectralReport gen = spectrum_generalized(
      {assemble_A(p, g), assemble_B(p, g), assemble_C(p, g)}, false);
  REQUIRE(gen.eigenvalues.size() == red.eigenvalues.size());
  for (size_t k = 0; k < red.eigenvalues.size(); ++k) {
    const double tol = 1e-8 * std::max(1.0, std::abs(red.eigenvalues[k]));
    CHECK(std::abs(red.eigenvalues[k] - gen.eigenvalues[k]) <= tol);
  }
  CHECK(gen.form_used == SolveForm::Generalized);
}

TEST_CASE("conjugate mode spectra are conjugate multisets") {
  const Params pp(1.5, 0.8, 2, 80);
  const Params pm(1.5, 0.8, -2, 80);
  const Grid g(pp);
  const auto sp = spectrum_reduced(assemble_L(pp, g), false);
  auto sm = spectrum_reduced(assemble_L(pm, g), false);
  // conjugate and re-sort by (re, im)
  std::vector<cplx> conj;
  for (const auto& ev : sm.eigenvalues) conj.push_back(std::conj(ev));
  std::sort(conj.begin(), conj.end(), [](const cplx& x, const cplx& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  for (size_t k = 0; k < conj.size(); ++k) {
    const double tol = 1e-8 * std::max(1.0, std::abs(sp.eigenvalues[k]));
    CHECK(std::abs(sp.eigenvalues[k] - conj[k]) <= tol);
  }
}

TEST_CASE("exactly one eigenvalue near zero, spectral gap above 5") {
  for (double a : {1.1, 2.0}) {
    const Params p(a, 0.0, 0, 320);
    const Grid g(p);
    const SpectralReport rep = spectrum_reduced(assemble_L(p, g), false);
    const double radius = 10.0 * p.delta;
    int inside = 0;
    for (const auto& ev : rep.eigenvalues) {
      if (std::abs(ev) <= radius)
        ++inside;
      else
        CHECK(ev.real() > 5.0);
    }
    CHECK(inside == 1);
  }
}

TEST_CASE("cosine angle basics") {
  Eigen::VectorXd v(3), w(3);
  v << 1, 2, 3;
  CHECK(cosine_angle(v, v) == doctest::Approx(1.0));
  w << 3, 0, -1;
  CHECK(cosine_angle(v, w) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(cosine_angle((-v).eval(), v) == doctest::Approx(1.0));  // sign-blind
  Eigen::VectorXd z = Eigen::VectorXd::Zero(3);
  CHECK_THROWS_AS(cosine_angle(z, v), std::invalid_argument);
}

TEST_CASE("realness audit") {
  const Params p0(2.0, 0.0, 0, 320);
  const Grid g(p0);
  const auto rep0 = spectrum_reduced(assemble_L(p0, g), false);
  CHECK(realness_audit(rep0, 1e-8));
  const auto repm = spectrum_reduced(assemble_M(p0, g), false);
  CHECK(realness_audit(repm, 1e-8));

  const Params p1(2.0, 1.0, 1, 320);
  const auto rep1 = spectrum_reduced(assemble_L(p1, g), false);
  CHECK_FALSE(realness_audit(rep1, 1e-3));
}

TEST_CASE("swirl positivity spot checks") {
  const Params p(2.0, 1.0, 1, 320);
  const Grid g(p);
  const auto rep = spectrum_reduced(assemble_M(p, g), false);
  CHECK(rep.min_real > 0.0);
  CHECK(std::abs(rep.nearest_zero_value) > 0.0);
}

TEST_CASE("eigenvalues are sorted and deterministic") {
  const Params p(1.5, 0.9, 1, 60);
  const Grid g(p);
  const auto r1 = spectrum_reduced(assemble_L(p, g), true);
  const auto r2 = spectrum_reduced(assemble_L(p, g), true);
  for (size_t k = 1; k < r1.eigenvalues.size(); ++k) {
    CHECK((r1.eigenvalues[k - 1].real() < r1.eigenvalues[k].real() ||
           (r1.eigenvalues[k - 1].real() == r1.eigenvalues[k].real() &&
            r1.eigenvalues[k - 1].imag() <= r1.eigenvalues[k].imag())));
  }
  CHECK(r1.eigenvalues == r2.eigenvalues);
  CHECK((r1.nearest_zero_vector - r2.nearest_zero_vector).norm() == 0.0);
  // normalization: unit norm, first significant component real positive
  CHECK(r1.nearest_zero_vector.norm() == doctest::Approx(1.0).epsilon(1e-12));
}
