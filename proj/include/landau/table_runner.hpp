#pragma once

#include <string>
#include <vector>

#include "landau/reference_tables.hpp"

namespace landau {

struct TableCellRun {
  ReferenceCell ref;
  double computed = 0.0;
  std::string error;   // nonempty on solver failure
  double rel_err = 0.0;
  bool pass = true;    // report-only cells never fail
};

struct TableRun {
  int id = 0;
  std::string title;
  std::vector<TableCellRun> cells;
  bool all_pass = true;
  bool had_solver_failure = false;
};

// Recompute every cell of the reference table and diff. Cells run in
// parallel up to `jobs`.
TableRun run_table(int id, int jobs = 1);

// One line per cell: labels, reference, computed, relative error, verdict.
std::string table_diff_text(const TableRun& run);

}  // namespace landau
