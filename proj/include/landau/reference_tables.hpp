#pragma once

#include <string>
#include <vector>

namespace landau {

// One reference cell: the value exactly as printed in the source table (text
// kept verbatim), plus the gating policy resolved at table-construction time.
//
// Tolerance policy: cells with |value| >= 1 gate at 0.5% relative; near-zero
// cells gate at 10% (they are discretization artifacts of the true zero
// eigenvalue and highly scheme-sensitive); a = 1.001 cells are report-only
// except in tables 2 (stable second eigenvalue), 3 (threshold test) and the
// large-sigma rows of table 4 (plain eigenvalues, insensitive). The mode-1
// table gates its two smallest-sigma rows only for a >= 1.1. The mu2 table
// gates at 0.2%. Table 3 cells are thresholds: computed >= value.
//
// A printed value only determines the true one up to half its last printed
// digit, so the comparison is |computed - value| <= rel_tol*|value| +
// half_step. The slack matters only for the few cells printed with one
// significant digit (e.g. "0.000001"); everywhere else it is orders of
// magnitude below the relative tolerance.
struct ReferenceCell {
  std::string row_label;
  std::string col_label;
  const char* text;
  double value = 0.0;
  bool gate = false;
  bool threshold = false;  // pass iff computed >= value (cosine table)
  double rel_tol = 0.0;
  double half_step = 0.0;  // half the last printed decimal of `text`
};

// half the print granularity of a decimal literal like "-6.5386e-04"
double print_half_step(const char* text);

struct ReferenceTable {
  int id = 0;
  std::string title;
  std::vector<ReferenceCell> cells;
};

// Tables:
//   1: minimum of real parts, zero mode (rows N, cols a)
//   2: second minimum of real parts, zero mode
//   3: cosine of angle between kernel eigenvector and d_a Psi (N = 640)
//   4: minimum of real parts, mode 1, N = 640 (rows sigma, cols a)
//   5: Re(mu_2) (rows N, cols a)
//   6: zero mode vs mode 1 at sigma = 0.001 (rows n/N, cols a)
const ReferenceTable& reference_table(int id);

}  // namespace landau
