#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "landau/operators.hpp"

namespace landau {

// The positivity form behind the no-zero/no-imaginary-eigenvalue proof for
// the swirl operator:
//   re_part = sum_k |D(g sin)_k|^2 (a-cos)^2/sin * delta
//           + (n sigma)^2 sum_k |g_k|^2 (a-cos)^2 sin * delta,
// with D the central difference applied to the zero-padded product g sin phi.
// im_part comes from the full weighted pairing <M_n g, g>.
struct QuadFormResult {
  double re_part = 0.0;
  double im_part = 0.0;
  Params params;
};

QuadFormResult m_quadratic_form(const Eigen::VectorXcd& g, const Params& p,
                                const Grid& grid);
// Amortized variant when M_n is already assembled.
QuadFormResult m_quadratic_form(const Eigen::VectorXcd& g,
                                const OperatorMatrix& m, const Grid& grid);

// Adjoint defect of b[g, f] = sum (M_0 g) f omega sin * delta over random
// smooth test pairs. With the symmetrizing weight omega = (a - cos phi)^2 the
// defect vanishes to quadrature order; any other choice leaves a finite gap.
struct WeightSpec {
  enum Kind { Symmetrizing, Unit, Custom } kind = Symmetrizing;
  double scale = 1.0;           // constant multiple, irrelevant to symmetry
  Eigen::VectorXd custom;       // node samples, used when kind == Custom
};

double weight_symmetry_defect(const WeightSpec& weight, double a, int N,
                              int trials, std::uint64_t seed = 20240901);

// Minimum real part and minimum modulus of the swirl spectrum over a
// parameter sweep; both must be strictly positive everywhere. The sweep stops
// at the first offending tuple.
struct PositivityRow {
  double a = 0.0;
  double sigma = 0.0;
  int n = 0;
  double min_real = 0.0;
  double min_abs = 0.0;
};

struct PositivityReport {
  std::vector<PositivityRow> rows;
  bool all_positive = true;
  std::optional<PositivityRow> first_failure;
};

PositivityReport m_spectrum_positivity_sweep(const std::vector<double>& a_list,
                                             const std::vector<double>& sigma_list,
                                             const std::vector<int>& n_list,
                                             int N);

}  // namespace landau
