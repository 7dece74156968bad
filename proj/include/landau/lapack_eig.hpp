#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace landau {

// Eigensolver (or linear-solver) failure with the offending parameters in the
// message. CLI layers map this to their solver-failure exit code.
struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

struct EigResult {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;  // empty unless requested
};

// Dense nonsymmetric standard eigenproblem. The complex overload dispatches
// to the real driver when the imaginary part is exactly zero, so spectra of
// real matrices come back with exactly real entries where the real Schur form
// has 1x1 blocks.
EigResult eig_standard(const Eigen::MatrixXd& m, bool with_vectors);
EigResult eig_standard(const Eigen::MatrixXcd& m, bool with_vectors);

struct PencilResult {
  Eigen::VectorXcd alpha;
  Eigen::VectorXcd beta;
  Eigen::MatrixXcd vectors;  // empty unless requested
};

// Generalized problem P y = mu Q y via the QZ drivers; eigenvalues come back
// as (alpha, beta) pairs, mu = alpha/beta, beta ~ 0 marking infinite ones.
PencilResult eig_pencil(const Eigen::MatrixXcd& p, const Eigen::MatrixXcd& q,
                        bool with_vectors);

// Number of LAPACK eigensolver invocations so far in this process. The sweep
// cache tests use this to prove a warm re-run does no eigensolves.
long eig_call_count();

}  // namespace detail
}  // namespace landau
