#include "landau/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace landau {

namespace {

using cplx = std::complex<double>;

std::string params_string(const Params& p) {
  std::ostringstream os;
  os << "a=" << p.a << " sigma=" << p.sigma << " n=" << p.n << " N=" << p.N;
  return os.str();
}

Eigen::VectorXcd normalize_vector(Eigen::VectorXcd v) {
  const double norm = v.norm();
  if (norm == 0.0) return v;
  v /= norm;
  const double scale = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12 * scale) {
      v *= std::abs(v[i]) / v[i];
      break;
    }
  }
  return v;
}

SpectralReport finalize(std::vector<cplx> values,
                        const Eigen::MatrixXcd& vectors,
                        const std::vector<int>& vector_index, SolveForm form,
                        const Params& params) {
  SpectralReport rep;
  rep.form_used = form;
  rep.params = params;

  // Nearest zero by |mu|, ties to the smaller |Im|.
  int nz = 0, mr = 0;
  for (int j = 1; j < static_cast<int>(values.size()); ++j) {
    const double d = std::abs(values[j]) - std::abs(values[nz]);
    if (d < 0.0 || (d == 0.0 && std::abs(values[j].imag()) <
                                    std::abs(values[nz].imag())))
      nz = j;
    if (values[j].real() < values[mr].real()) mr = j;
  }
  rep.nearest_zero_value = values[nz];
  rep.min_real_value = values[mr];
  if (vectors.size() > 0) {
    rep.nearest_zero_vector = normalize_vector(vectors.col(vector_index[nz]));
    rep.min_real_vector = normalize_vector(vectors.col(vector_index[mr]));
  }

  std::vector<double> re(values.size());
  rep.max_abs_imag = 0.0;
  for (size_t j = 0; j < values.size(); ++j) {
    re[j] = values[j].real();
    rep.max_abs_imag = std::max(rep.max_abs_imag, std::abs(values[j].imag()));
  }
  std::sort(re.begin(), re.end());
  rep.min_real = re.front();
  rep.second_min_real = re.size() > 1 ? re[1] : re.front();

  std::sort(values.begin(), values.end(), [](const cplx& x, const cplx& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  rep.eigenvalues = std::move(values);
  return rep;
}

}  // namespace

const char* to_string(SolveForm f) {
  return f == SolveForm::Reduced ? "reduced" : "generalized";
}

SpectralReport spectrum_reduced(const OperatorMatrix& op, bool with_vectors) {
  detail::EigResult eig;
  try {
    eig = detail::eig_standard(op.entries, with_vectors);
  } catch (const SolverError& e) {
    throw SolverError(std::string(e.what()) + " [op=" + to_string(op.tag) +
                      " " + params_string(op.params) + "]");
  }
  std::vector<cplx> values(eig.values.data(),
                           eig.values.data() + eig.values.size());
  std::vector<int> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  return finalize(std::move(values), eig.vectors, idx, SolveForm::Reduced,
                  op.params);
}

SpectralReport spectrum_generalized(const ModeBlocks& blocks,
                                    bool with_vectors) {
  const Eigen::Index n = blocks.a.entries.rows();
  if (blocks.b.entries.rows() != n || blocks.c.entries.rows() != n)
    throw std::invalid_argument("spectrum_generalized: block sizes differ");

  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  p.topLeftCorner(n, n).setIdentity();
  p.topRightCorner(n, n) = -blocks.a.entries;
  p.bottomLeftCorner(n, n) = blocks.a.entries + blocks.b.entries;
  p.bottomRightCorner(n, n) = blocks.c.entries;
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  q.bottomRightCorner(n, n).setIdentity();

  detail::PencilResult pencil;
  try {
    pencil = detail::eig_pencil(p, q, with_vectors);
  } catch (const SolverError& e) {
    throw SolverError(std::string(e.what()) +
                      " [pencil, " + params_string(blocks.a.params) + "]");
  }

  const double beta_scale = pencil.beta.cwiseAbs().maxCoeff();
  std::vector<cplx> values;
  std::vector<int> idx;
  for (Eigen::Index j = 0; j < pencil.beta.size(); ++j) {
    if (std::abs(pencil.beta[j]) > 1e-10 * beta_scale) {
      values.push_back(pencil.alpha[j] / pencil.beta[j]);
      idx.push_back(static_cast<int>(j));
    }
  }
  if (static_cast<Eigen::Index>(values.size()) != n)
    throw SolverError("pencil produced " + std::to_string(values.size()) +
                      " finite eigenvalues, expected " + std::to_string(n) +
                      " [" + params_string(blocks.a.params) + "]");

  Eigen::MatrixXcd vectors;
  if (with_vectors) {
    // Keep only the h block of Y = (A h, h).
    vectors = pencil.vectors.bottomRows(n);
  }
  return finalize(std::move(values), vectors, idx, SolveForm::Generalized,
                  blocks.a.params);
}

double second_min_real(const SpectralReport& report) {
  if (report.eigenvalues.size() < 2)
    throw std::invalid_argument("second_min_real: need at least 2 eigenvalues");
  return report.second_min_real;
}

double cosine_angle(const Eigen::VectorXd& v, const Eigen::VectorXd& w) {
  const double nv = v.norm(), nw = w.norm();
  if (nv == 0.0 || nw == 0.0)
    throw std::invalid_argument("cosine_angle: zero vector");
  return std::abs(v.dot(w)) / (nv * nw);
}

double cosine_angle(const Eigen::VectorXcd& v, const Eigen::VectorXd& w) {
  const double nv = v.norm(), nw = w.norm();
  if (nv == 0.0 || nw == 0.0)
    throw std::invalid_argument("cosine_angle: zero vector");
  return std::abs(v.dot(w.cast<std::complex<double>>())) / (nv * nw);
}

double cosine_angle_weighted(const Eigen::VectorXcd& v,
                             const Eigen::VectorXd& w,
                             const Eigen::VectorXd& weight) {
  const Eigen::VectorXd sq = weight.cwiseSqrt();
  return cosine_angle((v.array() * sq.cast<std::complex<double>>().array()).matrix().eval(),
                      (w.array() * sq.array()).matrix().eval());
}

bool realness_audit(const SpectralReport& report, double tol) {
  return report.max_abs_imag <= tol;
}

}  // namespace landau
