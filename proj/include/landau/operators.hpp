#pragma once

#include <complex>
#include <iosfwd>

#include <Eigen/Dense>

#include "landau/grid.hpp"

namespace landau {

enum class OperatorKind { A, B, C, E, L, M, T1, T2, T3, T4 };

const char* to_string(OperatorKind k);

// Dense complex matrix realization of one mode operator on the interior grid,
// tagged with the parameters that produced it. For n = 0 the imaginary part
// is identically zero (exact, not just small): every imaginary coefficient
// carries a factor n*sigma.
struct OperatorMatrix {
  Eigen::MatrixXcd entries;
  OperatorKind tag;
  Params params;

  bool is_real() const;
  Eigen::MatrixXd real_part() const { return entries.real(); }
};

// Mode operators. With s = n*sigma and w = (a^2-1)/(a-cos phi)^2:
//   A_n h = (s^2 - i s) h - h'' - cot(phi) h' + h / sin^2(phi)
//   B_n h = 2 i s (w+1) h - (2 sin phi/(a-cos phi)) h' + V h
//   C_n h = -(12(a^2-1) sin phi/(a-cos phi)^3) h'
//           + (12 i s (a^2-1) sin^2 phi/(a-cos phi)^4) h
//           + (12(a^2-1)(1-a cos phi)/(a-cos phi)^4) h
//   E_n g = i s (U_tau+2) g + U_phi g' + U_phi cot(phi) g
//   L_n   = (A_n + B_n) A_n + C_n        (stream operator)
//   M_n   = A_n + E_n                    (swirl operator)
OperatorMatrix assemble_A(const Params& p, const Grid& g);
OperatorMatrix assemble_B(const Params& p, const Grid& g);
OperatorMatrix assemble_C(const Params& p, const Grid& g);
OperatorMatrix assemble_E(const Params& p, const Grid& g);
OperatorMatrix assemble_L(const Params& p, const Grid& g);
OperatorMatrix assemble_M(const Params& p, const Grid& g);

// sigma-expansion blocks of the mode-1 stream operator around the zero mode:
//   L_1(sigma) = L_0 + sigma T1 + sigma^2 T2 + sigma^3 T3 + sigma^4 T4
// exactly, with
//   T1 = i (2w A_0 - B_0 + 12(a^2-1) sin^2 phi/(a-cos phi)^4 I)
//   T2 = 2 A_0 + B_0 + (1 + 2w) I
//   T3 = 2 i w I
//   T4 = I
struct SigmaExpansion {
  OperatorMatrix t1, t2, t3, t4;
};
SigmaExpansion assemble_T(const Params& p, const Grid& g);

// Real zero-mode builders. n = 0 matrices are real; the asymptotic pipeline
// works in these directly instead of taking the complex detour.
Eigen::MatrixXd a0_matrix(const Params& p, const Grid& g);
Eigen::MatrixXd b0_matrix(const Params& p, const Grid& g);
Eigen::MatrixXd c0_matrix(const Params& p, const Grid& g);
Eigen::MatrixXd e0_matrix(const Params& p, const Grid& g);
Eigen::MatrixXd l0_matrix(const Params& p, const Grid& g);
Eigen::MatrixXd m0_matrix(const Params& p, const Grid& g);

// Pointwise coefficient samples shared with the asymptotic pipeline.
Eigen::VectorXd coeff_w(double a, const Grid& g);       // (a^2-1)/(a-cos phi)^2
Eigen::VectorXd coeff_s4(double a, const Grid& g);      // 12(a^2-1) sin^2/(a-cos)^4
Eigen::VectorXd d_a_psi_samples(double a, const Grid& g);

// z-variable evaluation of the factorized zero-mode stream operator,
//   Ltilde0 H = d^3/dz^3 ( (1-z^2)^2/(a-z)^2 * d/dz ( (a-z)^2/(1-z^2) H ) ),
// on the pushforward nodes z_k = cos(phi_k). Each d/dz layer is a 3-point
// stencil on the nonuniform z-grid, one-sided at the two end nodes. Serves as
// an oracle for the phi-form assembly via L_0 h = sin(phi) Ltilde0(h sin phi).
// Requires at least 9 nodes.
Eigen::VectorXd apply_tilde_L0(double a, const Grid& g, const Eigen::VectorXd& H);

// Relative sup-norm of L_0 applied to sampled d_a Psi. The boundary rows of
// the composed fourth-order stencil do not converge pointwise (cot(phi_1)
// is ~1/delta and the outer application divides by delta^2), so `interior`
// takes the sup over the inner 80% of nodes, where the residual is O(delta^2);
// `full` is the all-rows value, kept for reporting.
struct KernelResidual {
  double interior = 0.0;
  double full = 0.0;
};
KernelResidual kernel_residual(double a, int N);

// Debug dump as (row, col, re, im) quadruples, one per line.
void dump_operator_csv(const OperatorMatrix& op, std::ostream& os);

}  // namespace landau
