#include "landau/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "landau/parallel.hpp"
#include "landau/report_io.hpp"

namespace landau {

namespace fs = std::filesystem;

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string params_cache_key(char op, SolveForm form, const Params& p) {
  std::ostringstream os;
  os << "op=" << op << ";form=" << to_string(form) << ";a=" << format_double(p.a)
     << ";sigma=" << format_double(p.sigma) << ";n=" << p.n << ";N=" << p.N;
  return os.str();
}

namespace {

std::string cache_path(const std::string& dir, const std::string& key) {
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(fnv1a64(key)));
  return dir + "/" + hex + ".json";
}

bool load_cached(const std::string& path, const std::string& key,
                 SweepRow& row) {
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json j;
  try {
    in >> j;
  } catch (...) {
    return false;
  }
  if (j.value("key", "") != key) return false;  // hash collision or stale
  const auto& rep = j.at("report");
  row.min_real = rep.at("min_real").get<double>();
  row.second_min_real = rep.at("second_min_real").get<double>();
  row.max_abs_imag = rep.at("max_abs_imag").get<double>();
  const auto& nz = rep.at("nearest_zero").at("value");
  row.nearest_zero_abs = std::hypot(nz.at(0).get<double>(), nz.at(1).get<double>());
  return true;
}

void store_cached(const std::string& path, const std::string& key,
                  const nlohmann::json& report) {
  nlohmann::json j;
  j["key"] = key;
  j["report"] = report;
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump();
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);  // atomic publish; losers of a race just rewrite
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.op != 'L' && spec.op != 'M')
    throw std::invalid_argument("sweep: op must be L or M");
  if (spec.op == 'M' && spec.form == SolveForm::Generalized)
    throw std::invalid_argument(
        "sweep: the generalized form applies to the stream operator only");

  SweepResult result;
  for (double a : spec.a_list)
    for (double sigma : spec.sigma_list)
      for (int n : spec.n_list)
        for (int N : spec.N_list) {
          SweepRow row;
          row.a = a;
          row.sigma = sigma;
          row.n = n;
          row.N = N;
          result.rows.push_back(row);
        }

  const bool use_cache = !spec.cache_dir.empty();
  if (use_cache) fs::create_directories(spec.cache_dir);

  detail::parallel_for(
      static_cast<int>(result.rows.size()), spec.jobs, [&](int i) {
        SweepRow& row = result.rows[i];
        try {
          const Params p(row.a, row.sigma, row.n, row.N);
          const std::string key = params_cache_key(spec.op, spec.form, p);
          const std::string path =
              use_cache ? cache_path(spec.cache_dir, key) : std::string();
          if (use_cache && load_cached(path, key, row)) {
            row.from_cache = true;
            return;
          }
          const Grid g(p);
          SpectralReport rep;
          if (spec.form == SolveForm::Generalized)
            rep = spectrum_generalized(
                {assemble_A(p, g), assemble_B(p, g), assemble_C(p, g)}, false);
          else
            rep = spectrum_reduced(spec.op == 'L' ? assemble_L(p, g)
                                                  : assemble_M(p, g),
                                   false);
          row.min_real = rep.min_real;
          row.second_min_real = rep.second_min_real;
          row.max_abs_imag = rep.max_abs_imag;
          row.nearest_zero_abs = std::abs(rep.nearest_zero_value);
          if (use_cache)
            store_cached(path, key, report_to_json(rep, spec.op == 'L'));
        } catch (const std::exception& e) {
          row.status = e.what();
        }
      });

  for (const auto& row : result.rows) {
    if (row.status == "ok") ++result.ok_count;
    if (row.from_cache) ++result.cache_hits;
  }
  return result;
}

std::string sweep_csv(const SweepResult& result) {
  std::ostringstream os;
  os << "a,sigma,n,N,min_real,second_min_real,max_abs_imag,nearest_zero_abs,"
        "status\n";
  for (const auto& r : result.rows) {
    os << format_double(r.a) << ',' << format_double(r.sigma) << ',' << r.n
       << ',' << r.N << ',';
    if (r.status == "ok")
      os << format_double(r.min_real) << ',' << format_double(r.second_min_real)
         << ',' << format_double(r.max_abs_imag) << ','
         << format_double(r.nearest_zero_abs);
    else
      os << ",,,";
    os << ',' << (r.status == "ok" ? "ok" : r.status) << '\n';
  }
  return os.str();
}

}  // namespace landau
