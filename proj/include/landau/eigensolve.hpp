#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "landau/lapack_eig.hpp"
#include "landau/operators.hpp"

namespace landau {

enum class SolveForm { Reduced, Generalized };

const char* to_string(SolveForm f);

// Full spectrum of one mode operator plus the scalar diagnostics the tables
// report. Eigenvalues are sorted by (re, im) ascending; eigenvectors, when
// computed, have unit norm and their first nonzero component rotated to be
// real positive.
//
// Two distinguished eigenpairs are kept: nearest_zero minimizes |mu| (ties to
// the smaller |Im|), and min_real attains the smallest real part. They
// coincide except very close to a = 1, where the discretization artifact of
// the true zero eigenvalue is a large negative value; the kernel comparison
// against d_a Psi always wants the min_real pair.
struct SpectralReport {
  std::vector<std::complex<double>> eigenvalues;
  double min_real = 0.0;
  double second_min_real = 0.0;
  double max_abs_imag = 0.0;
  std::complex<double> nearest_zero_value;
  Eigen::VectorXcd nearest_zero_vector;  // empty when vectors not requested
  std::complex<double> min_real_value;
  Eigen::VectorXcd min_real_vector;      // empty when vectors not requested
  SolveForm form_used = SolveForm::Reduced;
  Params params;
};

// Standard N x N solve of the mode operator itself.
SpectralReport spectrum_reduced(const OperatorMatrix& op,
                                bool with_vectors = true);

// The 2N x 2N first-order pencil
//   [[I, -A], [A+B, C]] Y = mu [[0, 0], [0, I]] Y,  Y = (A h, h),
// solved by QZ. The singular mass matrix produces exactly N infinite
// eigenvalues, which are filtered; anything else is a structural error. The
// finite spectrum must coincide with the reduced one.
struct ModeBlocks {
  OperatorMatrix a, b, c;
};
SpectralReport spectrum_generalized(const ModeBlocks& blocks,
                                    bool with_vectors = false);

// Second element of the real parts sorted ascending; no dedup clustering.
double second_min_real(const SpectralReport& report);

// |<v, w>| / (|v| |w|); absolute value since eigenvector sign is arbitrary.
double cosine_angle(const Eigen::VectorXd& v, const Eigen::VectorXd& w);
double cosine_angle(const Eigen::VectorXcd& v, const Eigen::VectorXd& w);

// Same with pointwise weights (sin phi variant reported alongside).
double cosine_angle_weighted(const Eigen::VectorXcd& v,
                             const Eigen::VectorXd& w,
                             const Eigen::VectorXd& weight);

// True iff no eigenvalue strays further than tol from the real axis.
bool realness_audit(const SpectralReport& report, double tol);

}  // namespace landau
