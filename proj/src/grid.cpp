#include "landau/grid.hpp"

#include <cmath>

namespace landau {

Grid::Grid(const Params& p) : delta(p.delta) {
  const int n = p.N;
  nodes.resize(n);
  sin_phi.resize(n);
  cos_phi.resize(n);
  cot_phi.resize(n);
  inv_sin2.resize(n);
  for (int k = 0; k < n; ++k) {
    const double phi = delta * (k + 1);
    nodes[k] = phi;
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    sin_phi[k] = s;
    cos_phi[k] = c;
    cot_phi[k] = c / s;
    inv_sin2[k] = 1.0 / (s * s);
  }
}

Eigen::MatrixXd diff1(const Grid& g) {
  const int n = g.size();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  const double c = 1.0 / (2.0 * g.delta);
  for (int k = 0; k < n; ++k) {
    if (k + 1 < n) d(k, k + 1) = c;
    if (k - 1 >= 0) d(k, k - 1) = -c;
  }
  return d;
}

Eigen::MatrixXd diff2(const Grid& g) {
  const int n = g.size();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  const double c = 1.0 / (g.delta * g.delta);
  for (int k = 0; k < n; ++k) {
    d(k, k) = -2.0 * c;
    if (k + 1 < n) d(k, k + 1) = c;
    if (k - 1 >= 0) d(k, k - 1) = c;
  }
  return d;
}

}  // namespace landau
