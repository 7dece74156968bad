#include "landau/swirl.hpp"

#include <cmath>
#include <random>

#include "landau/eigensolve.hpp"

namespace landau {

namespace {

using Eigen::VectorXcd;
using Eigen::VectorXd;
using cplx = std::complex<double>;

// Central difference of the zero-padded product g * sin phi.
VectorXcd padded_diff(const VectorXcd& w, double delta) {
  const Eigen::Index n = w.size();
  VectorXcd d(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const cplx up = k + 1 < n ? w[k + 1] : cplx{0.0, 0.0};
    const cplx dn = k - 1 >= 0 ? w[k - 1] : cplx{0.0, 0.0};
    d[k] = (up - dn) / (2.0 * delta);
  }
  return d;
}

}  // namespace

QuadFormResult m_quadratic_form(const Eigen::VectorXcd& g,
                                const OperatorMatrix& m, const Grid& grid) {
  const Params& p = m.params;
  const double a = p.a;
  const double ns = p.ns();
  const VectorXd weight = (a - grid.cos_phi.array()).square();

  const VectorXcd w = (g.array() * grid.sin_phi.cast<cplx>().array()).matrix();
  const VectorXcd dw = padded_diff(w, grid.delta);

  QuadFormResult out;
  out.params = p;
  out.re_part =
      (dw.cwiseAbs2().array() * weight.array() / grid.sin_phi.array()).sum() *
          grid.delta +
      ns * ns *
          (g.cwiseAbs2().array() * weight.array() * grid.sin_phi.array())
              .sum() *
          grid.delta;

  const VectorXcd mg = m.entries * g;
  cplx pairing{0.0, 0.0};
  for (Eigen::Index k = 0; k < g.size(); ++k)
    pairing += mg[k] * std::conj(g[k]) * weight[k] * grid.sin_phi[k];
  pairing *= grid.delta;
  out.im_part = pairing.imag();
  return out;
}

QuadFormResult m_quadratic_form(const Eigen::VectorXcd& g, const Params& p,
                                const Grid& grid) {
  return m_quadratic_form(g, assemble_M(p, grid), grid);
}

double weight_symmetry_defect(const WeightSpec& weight, double a, int N,
                              int trials, std::uint64_t seed) {
  if (trials < 1)
    throw std::invalid_argument("weight_symmetry_defect: trials >= 1");
  const Params p(a, 1.0, 0, N);
  const Grid g(p);
  const Eigen::MatrixXd m0 = m0_matrix(p, g);

  VectorXd omega;
  switch (weight.kind) {
    case WeightSpec::Symmetrizing:
      omega = weight.scale * (a - g.cos_phi.array()).square();
      break;
    case WeightSpec::Unit:
      omega = VectorXd::Constant(N, weight.scale);
      break;
    case WeightSpec::Custom:
      if (weight.custom.size() != N)
        throw std::invalid_argument("weight_symmetry_defect: custom size");
      omega = weight.custom;
      break;
  }

  // Smooth test pairs: low-frequency sine combinations, not white noise;
  // rough vectors would drown the O(delta) defect in discretization error.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  auto bump = [&]() {
    VectorXd v = VectorXd::Zero(N);
    for (int k = 1; k <= 6; ++k)
      v += coeff(rng) * (k * g.nodes.array()).sin().matrix();
    return v;
  };
  auto b = [&](const VectorXd& x, const VectorXd& y) {
    return (((m0 * x).array() * y.array() * omega.array() *
             g.sin_phi.array())
                .sum()) *
           g.delta;
  };
  // weighted norms keep the defect invariant under constant weight rescaling
  const auto wnorm = [&](const VectorXd& v) {
    return std::sqrt((v.array().square() * omega.array() * g.sin_phi.array())
                         .sum() *
                     g.delta);
  };

  double defect = 0.0;
  for (int t = 0; t < trials; ++t) {
    const VectorXd f = bump();
    const VectorXd h = bump();
    const double d = std::abs(b(f, h) - b(h, f)) / (wnorm(f) * wnorm(h));
    defect = std::max(defect, d);
  }
  return defect;
}

PositivityReport m_spectrum_positivity_sweep(
    const std::vector<double>& a_list, const std::vector<double>& sigma_list,
    const std::vector<int>& n_list, int N) {
  PositivityReport report;
  for (double a : a_list) {
    for (double sigma : sigma_list) {
      for (int n : n_list) {
        const Params p(a, sigma, n, N);
        const Grid g(p);
        const SpectralReport rep = spectrum_reduced(assemble_M(p, g), false);
        PositivityRow row;
        row.a = a;
        row.sigma = sigma;
        row.n = n;
        row.min_real = rep.min_real;
        row.min_abs = std::abs(rep.nearest_zero_value);
        report.rows.push_back(row);
        if (!(row.min_real > 0.0) || !(row.min_abs > 0.0)) {
          report.all_positive = false;
          report.first_failure = row;
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace landau
