// landau-spectra: spectra of the mode operators linearized around Landau
// solutions, table reproduction with tolerance diffs, kernel diagnostics,
// small-sigma asymptotics, and parameter sweeps.
//
// Exit codes: 0 success, 1 tolerance failure, 2 invalid parameters,
// 3 solver failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "landau/asymptotics.hpp"
#include "landau/eigensolve.hpp"
#include "landau/report_io.hpp"
#include "landau/sweep.hpp"
#include "landau/table_runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitSolver = 3;

struct CommonOpts {
  std::string op = "L";
  int n = 0;
  double a = 2.0;
  double sigma = 1.0;
  int N = 100;
  std::string form = "reduced";
  std::string format = "json";
  std::string out;
  bool svg = false;
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_op = true) {
  if (with_op)
    cmd->add_option("--op", o.op, "operator: L (stream) or M (swirl)")
        ->check(CLI::IsMember({"L", "M"}));
  cmd->add_option("--n", o.n, "Fourier mode index");
  cmd->add_option("--a", o.a, "Landau parameter, a > 1");
  cmd->add_option("--sigma", o.sigma, "radial frequency, > 0 when n != 0");
  cmd->add_option("--N", o.N, "interior node count");
  cmd->add_option("--form", o.form, "eigenproblem form")
      ->check(CLI::IsMember({"reduced", "generalized"}));
  cmd->add_option("--format", o.format, "output format for --out")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "output path");
  cmd->add_flag("--svg", o.svg, "also write an eigenvalue scatter SVG");
  cmd->add_option("--jobs", o.jobs, "parallel workers");
  cmd->set_config("--config", "", "flat key=value config file; flags override");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

void emit_report(const landau::SpectralReport& rep, const CommonOpts& o,
                 bool stream_op) {
  std::printf("min_real %s\nsecond_min_real %s\nmax_abs_imag %s\n",
              landau::format_double(rep.min_real).c_str(),
              landau::format_double(rep.second_min_real).c_str(),
              landau::format_double(rep.max_abs_imag).c_str());
  if (!o.out.empty()) {
    if (o.format == "json")
      write_file(o.out, landau::report_to_json(rep, stream_op).dump(2) + "\n");
    else
      write_file(o.out, landau::report_to_csv(rep));
  }
  if (o.svg) {
    std::string path = o.out.empty() ? "spectrum.svg"
                                     : std::filesystem::path(o.out)
                                           .replace_extension(".svg")
                                           .string();
    write_file(path, landau::report_to_svg(rep));
  }
}

std::vector<double> parse_list_d(const std::vector<std::string>& in) {
  std::vector<double> out;
  for (const auto& chunk : in) {
    std::stringstream ss(chunk);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  }
  return out;
}

std::vector<int> parse_list_i(const std::vector<std::string>& in) {
  std::vector<int> out;
  for (const auto& chunk : in) {
    std::stringstream ss(chunk);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectra of mode operators around Landau solutions"};
  app.require_subcommand(1);

  // spectrum
  CommonOpts so;
  std::string dump_op;
  CLI::App* spectrum = app.add_subcommand("spectrum", "solve one eigenproblem");
  add_common(spectrum, so);
  spectrum->add_option("--dump-op", dump_op,
                       "write the assembled operator as (row,col,re,im) CSV");

  // table
  int table_id = 1;
  CommonOpts to;
  CLI::App* table = app.add_subcommand(
      "table", "recompute a reference table and diff against it");
  table->add_option("--id", table_id, "table id, 1..6")->required();
  table->add_option("--jobs", to.jobs, "parallel workers");
  table->add_option("--out", to.out, "write the diff report to a file");
  table->set_config("--config");

  // kernel
  CommonOpts ko;
  CLI::App* kernel = app.add_subcommand(
      "kernel", "zero-mode kernel diagnostics against d_a Psi");
  kernel->add_option("--a", ko.a, "Landau parameter")->required();
  kernel->add_option("--N", ko.N, "interior node count")->required();
  kernel->set_config("--config");

  // mu2
  CommonOpts mo;
  CLI::App* mu2 = app.add_subcommand(
      "mu2", "second-order small-sigma coefficient Re(mu2)");
  mu2->add_option("--a", mo.a, "Landau parameter")->required();
  mu2->add_option("--N", mo.N, "interior node count")->required();
  mu2->add_option("--out", mo.out, "write bordered-solve diagnostics JSON");
  mu2->set_config("--config");

  // sweep
  CommonOpts wo;
  std::vector<std::string> wa, wsigma, wn, wN;
  std::string cache_dir;
  bool no_cache = false;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "spectra over the Cartesian product of parameter lists");
  sweep->add_option("--op", wo.op, "operator: L or M")
      ->check(CLI::IsMember({"L", "M"}));
  sweep->add_option("--a", wa, "comma-separated a values")->required();
  sweep->add_option("--sigma", wsigma, "comma-separated sigma values")
      ->required();
  sweep->add_option("--n", wn, "comma-separated mode indices")->required();
  sweep->add_option("--N", wN, "comma-separated node counts")->required();
  sweep->add_option("--form", wo.form, "eigenproblem form")
      ->check(CLI::IsMember({"reduced", "generalized"}));
  sweep->add_option("--out", wo.out, "CSV output path");
  sweep->add_option("--jobs", wo.jobs, "parallel workers");
  sweep->add_option("--cache", cache_dir, "cache directory");
  sweep->add_flag("--no-cache", no_cache, "disable the result cache");
  sweep->set_config("--config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*spectrum) {
      if (so.n != 0 && !(so.sigma > 0.0))
        throw std::invalid_argument("sigma must be positive when n != 0");
      const landau::Params p(so.a, so.sigma, so.n, so.N);
      const landau::Grid g(p);
      landau::SpectralReport rep;
      if (so.form == "generalized") {
        if (so.op != "L")
          throw std::invalid_argument(
              "the generalized form applies to the stream operator only");
        rep = landau::spectrum_generalized({landau::assemble_A(p, g),
                                            landau::assemble_B(p, g),
                                            landau::assemble_C(p, g)},
                                           true);
      } else {
        const landau::OperatorMatrix op = so.op == "L"
                                              ? landau::assemble_L(p, g)
                                              : landau::assemble_M(p, g);
        if (!dump_op.empty()) {
          std::ofstream os(dump_op);
          landau::dump_operator_csv(op, os);
        }
        rep = landau::spectrum_reduced(op, true);
      }
      emit_report(rep, so, so.op == "L");
      return kExitOk;
    }

    if (*table) {
      const landau::TableRun run = landau::run_table(table_id, to.jobs);
      const std::string diff = landau::table_diff_text(run);
      std::fputs(diff.c_str(), stdout);
      if (!to.out.empty()) write_file(to.out, diff);
      if (run.had_solver_failure) return kExitSolver;
      return run.all_pass ? kExitOk : kExitTolerance;
    }

    if (*kernel) {
      const landau::Params p(ko.a, 0.0, 0, ko.N);
      const landau::Grid g(p);
      const auto res = landau::kernel_residual(ko.a, ko.N);
      const auto rep = landau::spectrum_reduced(landau::assemble_L(p, g), true);
      const Eigen::VectorXd dpsi = landau::d_a_psi_samples(ko.a, g);
      std::printf("kernel_residual_interior %s\n",
                  landau::format_double(res.interior).c_str());
      std::printf("kernel_residual_full %s\n",
                  landau::format_double(res.full).c_str());
      std::printf("nearest_zero %s %s\n",
                  landau::format_double(rep.nearest_zero_value.real()).c_str(),
                  landau::format_double(rep.nearest_zero_value.imag()).c_str());
      std::printf("min_real %s\n",
                  landau::format_double(rep.min_real).c_str());
      std::printf("cos_angle_unweighted %s\n",
                  landau::format_double(
                      landau::cosine_angle(rep.min_real_vector, dpsi))
                      .c_str());
      std::printf("cos_angle_sin_weighted %s\n",
                  landau::format_double(landau::cosine_angle_weighted(
                                            rep.min_real_vector, dpsi,
                                            g.sin_phi))
                      .c_str());
      return kExitOk;
    }

    if (*mu2) {
      const landau::Mu2Result res = landau::second_order_mu2(mo.a, mo.N);
      std::printf("re_mu2 %s\n", landau::format_double(res.re_mu2).c_str());
      std::printf("im_mu1 %s\n",
                  landau::format_double(res.first.im.mu).c_str());
      if (!mo.out.empty()) {
        nlohmann::json j;
        j["a"] = mo.a;
        j["N"] = mo.N;
        j["re_mu2"] = res.re_mu2;
        j["im_mu1"] = res.first.im.mu;
        j["first_order"] = {{"residual_norm", res.first.im.residual_norm},
                            {"orthogonality", res.first.im.orthogonality}};
        j["second_order"] = {{"residual_norm", res.second.residual_norm},
                             {"orthogonality", res.second.orthogonality}};
        write_file(mo.out, j.dump(2) + "\n");
      }
      return kExitOk;
    }

    if (*sweep) {
      landau::SweepSpec spec;
      spec.op = wo.op == "M" ? 'M' : 'L';
      spec.form = wo.form == "generalized" ? landau::SolveForm::Generalized
                                           : landau::SolveForm::Reduced;
      spec.a_list = parse_list_d(wa);
      spec.sigma_list = parse_list_d(wsigma);
      spec.n_list = parse_list_i(wn);
      spec.N_list = parse_list_i(wN);
      spec.jobs = wo.jobs;
      if (!no_cache)
        spec.cache_dir = cache_dir.empty()
                             ? (std::filesystem::current_path() / ".landau-cache")
                                   .string()
                             : cache_dir;
      const landau::SweepResult result = landau::run_sweep(spec);
      const std::string csv = landau::sweep_csv(result);
      if (wo.out.empty())
        std::fputs(csv.c_str(), stdout);
      else
        write_file(wo.out, csv);
      std::fprintf(stderr, "sweep: %d/%zu rows ok, %d from cache\n",
                   result.ok_count, result.rows.size(), result.cache_hits);
      return result.ok_count >= 1 ? kExitOk : kExitSolver;
    }
  } catch (const landau::SolverError& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return kExitSolver;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid parameters: %s\n", e.what());
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitSolver;
  }
  return kExitOk;
}
