#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "landau/eigensolve.hpp"

namespace landau {

// Cartesian-product spectrum sweep with an on-disk result cache. Rows come
// back in canonical loop order (a, sigma, n, N) regardless of the parallelism
// degree, so serialized output is deterministic.
struct SweepSpec {
  char op = 'L';  // 'L' stream, 'M' swirl
  SolveForm form = SolveForm::Reduced;
  std::vector<double> a_list;
  std::vector<double> sigma_list;
  std::vector<int> n_list;
  std::vector<int> N_list;
  int jobs = 1;
  std::string cache_dir;  // empty disables the cache
};

struct SweepRow {
  double a = 0.0;
  double sigma = 0.0;
  int n = 0;
  int N = 0;
  std::string status = "ok";  // or the error text
  bool from_cache = false;
  double min_real = 0.0;
  double second_min_real = 0.0;
  double max_abs_imag = 0.0;
  double nearest_zero_abs = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  int ok_count = 0;
  int cache_hits = 0;
};

SweepResult run_sweep(const SweepSpec& spec);

// header: a,sigma,n,N,min_real,second_min_real,max_abs_imag,nearest_zero_abs,status
std::string sweep_csv(const SweepResult& result);

// Cache key and filename hash, exposed for the cache tests.
std::string params_cache_key(char op, SolveForm form, const Params& p);
std::uint64_t fnv1a64(std::string_view s);

}  // namespace landau
