#include "landau/operators.hpp"

#include <cmath>
#include <ostream>

#include "landau/landau_core.hpp"

namespace landau {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

// (a^2-1)/(a-cos phi)^2 at the nodes.
VectorXd w_samples(double a, const Grid& g) {
  return (a * a - 1.0) /
         (a - g.cos_phi.array()).square();
}

// 12 (a^2-1) sin^2 phi / (a-cos phi)^4 at the nodes.
VectorXd s4_samples(double a, const Grid& g) {
  return 12.0 * (a * a - 1.0) * g.sin_phi.array().square() /
         (a - g.cos_phi.array()).pow(4);
}

}  // namespace

Eigen::VectorXd coeff_w(double a, const Grid& g) { return w_samples(a, g); }

Eigen::VectorXd coeff_s4(double a, const Grid& g) { return s4_samples(a, g); }

Eigen::VectorXd d_a_psi_samples(double a, const Grid& g) {
  return (-2.0 * g.sin_phi.array() / (a - g.cos_phi.array()).square())
      .matrix();
}

const char* to_string(OperatorKind k) {
  switch (k) {
    case OperatorKind::A: return "A";
    case OperatorKind::B: return "B";
    case OperatorKind::C: return "C";
    case OperatorKind::E: return "E";
    case OperatorKind::L: return "L";
    case OperatorKind::M: return "M";
    case OperatorKind::T1: return "T1";
    case OperatorKind::T2: return "T2";
    case OperatorKind::T3: return "T3";
    case OperatorKind::T4: return "T4";
  }
  return "?";
}

bool OperatorMatrix::is_real() const {
  return (entries.imag().array() == 0.0).all();
}

Eigen::MatrixXd a0_matrix(const Params& p, const Grid& g) {
  MatrixXd m = -diff2(g) - g.cot_phi.asDiagonal() * diff1(g);
  m += MatrixXd(g.inv_sin2.asDiagonal());
  return m;
}

Eigen::MatrixXd b0_matrix(const Params& p, const Grid& g) {
  const double a = p.a;
  const VectorXd first = 2.0 * g.sin_phi.array() / (a - g.cos_phi.array());
  const VectorXd v =
      2.0 - (4.0 * a * a + 2.0 * a * g.cos_phi.array() - 6.0) /
                (a - g.cos_phi.array()).square();
  MatrixXd m = (-first).asDiagonal() * diff1(g);
  m += MatrixXd(v.asDiagonal());
  return m;
}

Eigen::MatrixXd c0_matrix(const Params& p, const Grid& g) {
  const double a = p.a;
  const double a21 = a * a - 1.0;
  const VectorXd first =
      12.0 * a21 * g.sin_phi.array() / (a - g.cos_phi.array()).cube();
  const VectorXd zeroth = 12.0 * a21 *
                          (1.0 - a * g.cos_phi.array()) /
                          (a - g.cos_phi.array()).pow(4);
  MatrixXd m = (-first).asDiagonal() * diff1(g);
  m += MatrixXd(zeroth.asDiagonal());
  return m;
}

Eigen::MatrixXd e0_matrix(const Params& p, const Grid& g) {
  const double a = p.a;
  const VectorXd u_phi = -2.0 * g.sin_phi.array() / (a - g.cos_phi.array());
  MatrixXd m = u_phi.asDiagonal() * diff1(g);
  m += MatrixXd((u_phi.array() * g.cot_phi.array()).matrix().asDiagonal());
  return m;
}

Eigen::MatrixXd l0_matrix(const Params& p, const Grid& g) {
  const MatrixXd a0 = a0_matrix(p, g);
  return (a0 + b0_matrix(p, g)) * a0 + c0_matrix(p, g);
}

Eigen::MatrixXd m0_matrix(const Params& p, const Grid& g) {
  return a0_matrix(p, g) + e0_matrix(p, g);
}

OperatorMatrix assemble_A(const Params& p, const Grid& g) {
  const double s = p.ns();
  MatrixXcd m = a0_matrix(p, g).cast<cplx>();
  m.diagonal().array() += s * s - kI * s;
  return {std::move(m), OperatorKind::A, p};
}

OperatorMatrix assemble_B(const Params& p, const Grid& g) {
  const double s = p.ns();
  MatrixXcd m = b0_matrix(p, g).cast<cplx>();
  m.diagonal() += (2.0 * kI * s * (w_samples(p.a, g).array() + 1.0)).matrix();
  return {std::move(m), OperatorKind::B, p};
}

OperatorMatrix assemble_C(const Params& p, const Grid& g) {
  const double s = p.ns();
  MatrixXcd m = c0_matrix(p, g).cast<cplx>();
  m.diagonal() += (kI * s * s4_samples(p.a, g).array()).matrix();
  return {std::move(m), OperatorKind::C, p};
}

OperatorMatrix assemble_E(const Params& p, const Grid& g) {
  const double s = p.ns();
  const double a = p.a;
  const VectorXd u_tau = 2.0 * (w_samples(a, g).array() - 1.0);
  MatrixXcd m = e0_matrix(p, g).cast<cplx>();
  m.diagonal() += (kI * s * (u_tau.array() + 2.0)).matrix();
  return {std::move(m), OperatorKind::E, p};
}

OperatorMatrix assemble_L(const Params& p, const Grid& g) {
  const OperatorMatrix a = assemble_A(p, g);
  const OperatorMatrix b = assemble_B(p, g);
  const OperatorMatrix c = assemble_C(p, g);
  MatrixXcd m = (a.entries + b.entries) * a.entries + c.entries;
  return {std::move(m), OperatorKind::L, p};
}

OperatorMatrix assemble_M(const Params& p, const Grid& g) {
  MatrixXcd m = assemble_A(p, g).entries + assemble_E(p, g).entries;
  return {std::move(m), OperatorKind::M, p};
}

SigmaExpansion assemble_T(const Params& p, const Grid& g) {
  const int n = g.size();
  const MatrixXd a0 = a0_matrix(p, g);
  const MatrixXd b0 = b0_matrix(p, g);
  const VectorXd w2 = 2.0 * w_samples(p.a, g);
  const VectorXd s4 = s4_samples(p.a, g);

  MatrixXd t1_real = w2.asDiagonal() * a0 - b0;
  t1_real += MatrixXd(s4.asDiagonal());
  MatrixXd t2 = 2.0 * a0 + b0;
  t2.diagonal().array() += 1.0;
  t2.diagonal() += w2;

  SigmaExpansion out{
      {kI * t1_real.cast<cplx>(), OperatorKind::T1, p},
      {t2.cast<cplx>(), OperatorKind::T2, p},
      {MatrixXcd::Zero(n, n), OperatorKind::T3, p},
      {MatrixXcd::Identity(n, n), OperatorKind::T4, p}};
  out.t3.entries.diagonal() = (kI * w2.array()).matrix();
  return out;
}

namespace {

// First derivative on arbitrary distinct nodes: 3-point Lagrange stencil,
// central where possible, one-sided at the ends.
VectorXd d1_nodes(const VectorXd& x, const VectorXd& f) {
  const int n = static_cast<int>(x.size());
  VectorXd out(n);
  for (int k = 0; k < n; ++k) {
    const int j = std::min(std::max(k - 1, 0), n - 3);
    const double x0 = x[j], x1 = x[j + 1], x2 = x[j + 2], xe = x[k];
    const double w0 = (2.0 * xe - x1 - x2) / ((x0 - x1) * (x0 - x2));
    const double w1 = (2.0 * xe - x0 - x2) / ((x1 - x0) * (x1 - x2));
    const double w2 = (2.0 * xe - x0 - x1) / ((x2 - x0) * (x2 - x1));
    out[k] = w0 * f[j] + w1 * f[j + 1] + w2 * f[j + 2];
  }
  return out;
}

}  // namespace

Eigen::VectorXd apply_tilde_L0(double a, const Grid& g,
                               const Eigen::VectorXd& H) {
  const int n = g.size();
  if (n < 9)
    throw std::invalid_argument(
        "apply_tilde_L0: need at least 9 nodes for the nested third derivative");
  if (H.size() != n)
    throw std::invalid_argument("apply_tilde_L0: H size does not match grid");

  const VectorXd z = g.cos_phi;
  // 1 - z^2 as sin^2 phi: exact to rounding even next to the poles.
  const VectorXd one_m_z2 = g.sin_phi.array().square();
  const VectorXd am_z = (a - z.array()).matrix();

  const VectorXd inner =
      (am_z.array().square() / one_m_z2.array() * H.array()).matrix();
  VectorXd d = d1_nodes(z, inner);
  d = (one_m_z2.array().square() / am_z.array().square() * d.array()).matrix();
  d = d1_nodes(z, d);
  d = d1_nodes(z, d);
  d = d1_nodes(z, d);
  return d;
}

KernelResidual kernel_residual(double a, int N) {
  const Params p(a, 0.0, 0, N);
  const Grid g(p);
  const VectorXd dpsi = d_a_psi_samples(a, g);
  const VectorXd res = l0_matrix(p, g) * dpsi;
  const double scale = dpsi.cwiseAbs().maxCoeff();
  KernelResidual out;
  out.full = res.cwiseAbs().maxCoeff() / scale;
  const int lo = N / 10, hi = N - N / 10;
  out.interior = res.segment(lo, hi - lo).cwiseAbs().maxCoeff() / scale;
  return out;
}

void dump_operator_csv(const OperatorMatrix& op, std::ostream& os) {
  const auto& m = op.entries;
  os << "row,col,re,im\n";
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      os << i << ',' << j << ',' << m(i, j).real() << ',' << m(i, j).imag()
         << '\n';
}

}  // namespace landau
