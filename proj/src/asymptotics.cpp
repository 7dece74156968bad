#include "landau/asymptotics.hpp"

#include <cmath>

#include "landau/eigensolve.hpp"
#include "landau/lapack_eig.hpp"

namespace landau {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

BorderedSolution extract(const MatrixXd& l0, const VectorXd& dpsi,
                         const VectorXd& rhs, VectorXd eta, double mu) {
  BorderedSolution sol;
  sol.mu = mu;
  const VectorXd res = l0 * eta - mu * dpsi - rhs;
  const double rhs_norm = rhs.norm();
  sol.residual_norm = rhs_norm > 0.0 ? res.norm() / rhs_norm : res.norm();
  const double en = eta.norm();
  sol.orthogonality =
      en > 0.0 ? std::abs(dpsi.dot(eta)) / (dpsi.norm() * en) : 0.0;
  // Singularity check against the backward-error scale: the rhs-relative
  // residual bottoms out at eps * ||L0|| * ||eta|| / ||rhs||, which passes
  // 1e-8 around N ~ 600 simply because evaluating L0*eta costs that much.
  const double scale = l0.cwiseAbs().rowwise().sum().maxCoeff() * en +
                       std::abs(mu) * dpsi.norm() + rhs_norm;
  if (scale > 0.0 && res.norm() / scale > 1e-10)
    throw SolverError("bordered solve backward error " +
                      std::to_string(res.norm() / scale) +
                      "; bordered matrix is near singular");
  sol.eta = std::move(eta);
  return sol;
}

}  // namespace

BorderedSolution solve_bordered(const Eigen::MatrixXd& l0,
                                const Eigen::VectorXd& dpsi,
                                const Eigen::VectorXd& rhs) {
  const Eigen::Index n = l0.rows();
  if (dpsi.size() != n || rhs.size() != n)
    throw std::invalid_argument("solve_bordered: size mismatch");

  MatrixXd m(n + 1, n + 1);
  m.topLeftCorner(n, n) = l0;
  m.topRightCorner(n, 1) = -dpsi;
  m.bottomLeftCorner(1, n) = dpsi.transpose();
  m(n, n) = 0.0;
  VectorXd b(n + 1);
  b.head(n) = rhs;
  b[n] = 0.0;

  const VectorXd y = Eigen::PartialPivLU<MatrixXd>(m).solve(b);
  return extract(l0, dpsi, rhs, y.head(n), y[n]);
}

BorderedSolution solve_bordered_first_order(const Eigen::MatrixXd& a0,
                                            const Eigen::MatrixXd& b0,
                                            const Eigen::MatrixXd& c0,
                                            const Eigen::VectorXd& dpsi,
                                            const Eigen::VectorXd& rhs) {
  const Eigen::Index n = a0.rows();
  MatrixXd m = MatrixXd::Zero(2 * n + 1, 2 * n + 1);
  m.topLeftCorner(n, n).setIdentity();
  m.block(0, n, n, n) = -a0;
  m.block(n, 0, n, n) = a0 + b0;
  m.block(n, n, n, n) = c0;
  m.block(n, 2 * n, n, 1) = -dpsi;
  m.block(2 * n, n, 1, n) = dpsi.transpose();

  VectorXd b = VectorXd::Zero(2 * n + 1);
  b.segment(n, n) = rhs;

  const VectorXd y = Eigen::PartialPivLU<MatrixXd>(m).solve(b);
  const MatrixXd l0 = (a0 + b0) * a0 + c0;
  return extract(l0, dpsi, rhs, y.segment(n, n), y[2 * n]);
}

FirstOrderResult first_order_imaginary(double a, int N) {
  const Params p(a, 0.0, 0, N);
  const Grid g(p);
  const MatrixXd a0 = a0_matrix(p, g);
  const MatrixXd b0 = b0_matrix(p, g);
  const MatrixXd l0 = (a0 + b0) * a0 + c0_matrix(p, g);
  const VectorXd dpsi = d_a_psi_samples(a, g);
  const VectorXd w2 = 2.0 * coeff_w(a, g);
  const VectorXd s4 = coeff_s4(a, g);

  FirstOrderResult out;
  out.rhs = -(w2.array() * (a0 * dpsi).array()).matrix() + b0 * dpsi -
            (s4.array() * dpsi.array()).matrix();
  out.im = solve_bordered(l0, dpsi, out.rhs);
  return out;
}

Mu2Result second_order_mu2(double a, int N) {
  const Params p(a, 0.0, 0, N);
  const Grid g(p);
  const MatrixXd a0 = a0_matrix(p, g);
  const MatrixXd b0 = b0_matrix(p, g);
  const MatrixXd l0 = (a0 + b0) * a0 + c0_matrix(p, g);
  const VectorXd dpsi = d_a_psi_samples(a, g);
  const VectorXd w2 = 2.0 * coeff_w(a, g);
  const VectorXd s4 = coeff_s4(a, g);

  Mu2Result out;
  // First order, reusing the assembled matrices.
  out.first.rhs = -(w2.array() * (a0 * dpsi).array()).matrix() + b0 * dpsi -
                  (s4.array() * dpsi.array()).matrix();
  out.first.im = solve_bordered(l0, dpsi, out.first.rhs);

  const VectorXd& eta1 = out.first.im.eta;
  const double mu1 = out.first.im.mu;

  // (2 A0 + B0) dpsi in closed form.
  const VectorXd two_a0_b0_dpsi =
      (-4.0 * (a * a - 1.0) * g.sin_phi.array() /
       (a - g.cos_phi.array()).pow(4))
          .matrix();

  VectorXd rhs2 = -two_a0_b0_dpsi -
                  ((1.0 + w2.array()) * dpsi.array()).matrix() +
                  (w2.array() * (a0 * eta1).array()).matrix() - b0 * eta1 +
                  (s4.array() * eta1.array()).matrix() - mu1 * eta1;
  out.second = solve_bordered(l0, dpsi, rhs2);
  out.re_mu2 = out.second.mu;
  return out;
}

double re_mu2(double a, int N) { return second_order_mu2(a, N).re_mu2; }

std::pair<double, double> small_sigma_consistency(double a, double sigma,
                                                  int N) {
  const Params p(a, sigma, 1, N);
  const Grid g(p);
  const SpectralReport rep = spectrum_reduced(assemble_L(p, g), false);
  const double asymptotic = re_mu2(a, N) * sigma * sigma;
  return {rep.min_real, asymptotic};
}

}  // namespace landau
