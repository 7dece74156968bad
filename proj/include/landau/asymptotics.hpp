#pragma once

#include <utility>

#include <Eigen/Dense>

#include "landau/operators.hpp"

namespace landau {

// Solution of the bordered system
//   [ L0, -dpsi ] [eta]   [rhs]
//   [ dpsi^T, 0 ] [mu ] = [ 0 ],
// i.e. L0 eta - mu dpsi = rhs subject to <dpsi, eta> = 0. The kernel of L0 is
// one-dimensional (spanned by dpsi samples up to discretization), so the
// border makes the system square and nonsingular.
struct BorderedSolution {
  Eigen::VectorXd eta;
  double mu = 0.0;
  double residual_norm = 0.0;   // |L0 eta - mu dpsi - rhs| / |rhs|
  double orthogonality = 0.0;   // |<dpsi, eta>| / (|dpsi| |eta|)
};

BorderedSolution solve_bordered(const Eigen::MatrixXd& l0,
                                const Eigen::VectorXd& dpsi,
                                const Eigen::VectorXd& rhs);

// Same system in the (2N+1)-unknown first-order form with Y = (A0 eta, eta,
// mu); algebraically identical, kept as a conditioning cross-check.
BorderedSolution solve_bordered_first_order(const Eigen::MatrixXd& a0,
                                            const Eigen::MatrixXd& b0,
                                            const Eigen::MatrixXd& c0,
                                            const Eigen::VectorXd& dpsi,
                                            const Eigen::VectorXd& rhs);

// Order-sigma imaginary part: solves
//   L0 Im(eta1) - Im(mu1) dpsi = -2w (A0 dpsi) + B0 dpsi - s4 dpsi
// (the real bracket multiplying i in the first-order equation).
struct FirstOrderResult {
  BorderedSolution im;
  Eigen::VectorXd rhs;
};
FirstOrderResult first_order_imaginary(double a, int N);

// Order-sigma^2 real part. The T2 dpsi piece uses the closed form
// (2 A0 + B0) dpsi = -4 (a^2-1) sin(phi) / (a - cos phi)^4.
struct Mu2Result {
  double re_mu2 = 0.0;
  BorderedSolution second;
  FirstOrderResult first;
};
Mu2Result second_order_mu2(double a, int N);

double re_mu2(double a, int N);

// (min real of the mode-1 stream spectrum, re_mu2 * sigma^2), side by side.
// No equality is asserted; the pair is reported for comparison.
std::pair<double, double> small_sigma_consistency(double a, double sigma,
                                                  int N);

}  // namespace landau
