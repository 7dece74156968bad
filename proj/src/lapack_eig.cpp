#include "landau/lapack_eig.hpp"

#include <atomic>

#include <lapacke.h>

namespace landau::detail {

namespace {

std::atomic<long> g_eig_calls{0};

lapack_complex_double* lp(Eigen::MatrixXcd& m) {
  return reinterpret_cast<lapack_complex_double*>(m.data());
}
lapack_complex_double* lp(Eigen::VectorXcd& v) {
  return reinterpret_cast<lapack_complex_double*>(v.data());
}

[[noreturn]] void fail(const char* driver, int info) {
  throw SolverError(std::string(driver) + " failed, info=" +
                    std::to_string(info));
}

}  // namespace

long eig_call_count() { return g_eig_calls.load(); }

EigResult eig_standard(const Eigen::MatrixXd& m, bool with_vectors) {
  ++g_eig_calls;
  const int n = static_cast<int>(m.rows());
  Eigen::MatrixXd a = m;  // dgeev destroys its input
  Eigen::VectorXd wr(n), wi(n);
  Eigen::MatrixXd vr(with_vectors ? n : 1, with_vectors ? n : 1);
  int info = LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', with_vectors ? 'V' : 'N', n,
                           a.data(), n, wr.data(), wi.data(), nullptr, 1,
                           vr.data(), with_vectors ? n : 1);
  if (info != 0) fail("dgeev", info);

  EigResult out;
  out.values.resize(n);
  for (int j = 0; j < n; ++j) out.values[j] = {wr[j], wi[j]};
  if (with_vectors) {
    out.vectors.resize(n, n);
    // Complex conjugate pairs are packed as (real col, imag col).
    for (int j = 0; j < n;) {
      if (wi[j] == 0.0) {
        out.vectors.col(j) = vr.col(j).cast<std::complex<double>>();
        ++j;
      } else {
        for (int i = 0; i < n; ++i) {
          out.vectors(i, j) = {vr(i, j), vr(i, j + 1)};
          out.vectors(i, j + 1) = {vr(i, j), -vr(i, j + 1)};
        }
        j += 2;
      }
    }
  }
  return out;
}

EigResult eig_standard(const Eigen::MatrixXcd& m, bool with_vectors) {
  if ((m.imag().array() == 0.0).all()) return eig_standard(m.real().eval(), with_vectors);
  ++g_eig_calls;
  const int n = static_cast<int>(m.rows());
  Eigen::MatrixXcd a = m;
  EigResult out;
  out.values.resize(n);
  if (with_vectors) out.vectors.resize(n, n);
  Eigen::MatrixXcd vr(with_vectors ? n : 1, with_vectors ? n : 1);
  int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', with_vectors ? 'V' : 'N', n,
                           lp(a), n, lp(out.values), nullptr, 1, lp(vr),
                           with_vectors ? n : 1);
  if (info != 0) fail("zgeev", info);
  if (with_vectors) out.vectors = vr;
  return out;
}

PencilResult eig_pencil(const Eigen::MatrixXcd& p, const Eigen::MatrixXcd& q,
                        bool with_vectors) {
  ++g_eig_calls;
  const int n = static_cast<int>(p.rows());
  PencilResult out;
  out.alpha.resize(n);
  out.beta.resize(n);

  const bool real_pencil =
      (p.imag().array() == 0.0).all() && (q.imag().array() == 0.0).all();
  if (real_pencil) {
    Eigen::MatrixXd a = p.real(), b = q.real();
    Eigen::VectorXd ar(n), ai(n), be(n);
    Eigen::MatrixXd vr(with_vectors ? n : 1, with_vectors ? n : 1);
    int info = LAPACKE_dggev(LAPACK_COL_MAJOR, 'N', with_vectors ? 'V' : 'N',
                             n, a.data(), n, b.data(), n, ar.data(), ai.data(),
                             be.data(), nullptr, 1, vr.data(),
                             with_vectors ? n : 1);
    if (info != 0) fail("dggev", info);
    for (int j = 0; j < n; ++j) {
      out.alpha[j] = {ar[j], ai[j]};
      out.beta[j] = be[j];
    }
    if (with_vectors) {
      out.vectors.resize(n, n);
      for (int j = 0; j < n;) {
        if (ai[j] == 0.0) {
          out.vectors.col(j) = vr.col(j).cast<std::complex<double>>();
          ++j;
        } else {
          for (int i = 0; i < n; ++i) {
            out.vectors(i, j) = {vr(i, j), vr(i, j + 1)};
            out.vectors(i, j + 1) = {vr(i, j), -vr(i, j + 1)};
          }
          j += 2;
        }
      }
    }
    return out;
  }

  Eigen::MatrixXcd a = p, b = q;
  Eigen::MatrixXcd vr(with_vectors ? n : 1, with_vectors ? n : 1);
  int info = LAPACKE_zggev(LAPACK_COL_MAJOR, 'N', with_vectors ? 'V' : 'N', n,
                           lp(a), n, lp(b), n, lp(out.alpha), lp(out.beta),
                           nullptr, 1, lp(vr), with_vectors ? n : 1);
  if (info != 0) fail("zggev", info);
  if (with_vectors) out.vectors = vr;
  return out;
}

}  // namespace landau::detail
