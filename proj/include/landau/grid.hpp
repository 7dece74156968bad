#pragma once

#include <Eigen/Dense>

#include "landau/params.hpp"

namespace landau {

// Uniform interior grid phi_k = k*delta, k = 1..N, delta = pi/(N+1), with the
// coefficient samples the assemblies need. Endpoint values are never stored:
// every field carries homogeneous Dirichlet data and the stencils eliminate
// them, so all operator matrices are exactly N x N.
struct Grid {
  double delta = 0.0;
  Eigen::VectorXd nodes;
  Eigen::VectorXd sin_phi;
  Eigen::VectorXd cos_phi;
  Eigen::VectorXd cot_phi;
  Eigen::VectorXd inv_sin2;

  explicit Grid(const Params& p);
  int size() const { return static_cast<int>(nodes.size()); }
};

// Central first derivative (h_{k+1} - h_{k-1}) / (2 delta), boundary values
// eliminated. Tridiagonal, stored dense: downstream products densify anyway.
Eigen::MatrixXd diff1(const Grid& g);

// Second derivative (h_{k+1} - 2 h_k + h_{k-1}) / delta^2, same elimination.
Eigen::MatrixXd diff2(const Grid& g);

}  // namespace landau
