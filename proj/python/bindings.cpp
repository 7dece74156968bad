#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "landau/asymptotics.hpp"
#include "landau/eigensolve.hpp"
#include "landau/landau_core.hpp"
#include "landau/swirl.hpp"

namespace py = pybind11;
using namespace landau;

namespace {

OperatorMatrix assemble_by_name(const std::string& op, const Params& p,
                                const Grid& g) {
  if (op == "A") return assemble_A(p, g);
  if (op == "B") return assemble_B(p, g);
  if (op == "C") return assemble_C(p, g);
  if (op == "E") return assemble_E(p, g);
  if (op == "L") return assemble_L(p, g);
  if (op == "M") return assemble_M(p, g);
  throw std::invalid_argument("operator must be one of A, B, C, E, L, M");
}

py::dict report_dict(const SpectralReport& rep) {
  py::dict d;
  py::list evs;
  for (const auto& ev : rep.eigenvalues) evs.append(ev);
  d["eigenvalues"] = evs;
  d["min_real"] = rep.min_real;
  d["second_min_real"] = rep.second_min_real;
  d["max_abs_imag"] = rep.max_abs_imag;
  d["nearest_zero"] = rep.nearest_zero_value;
  d["form"] = to_string(rep.form_used);
  if (rep.min_real_vector.size() > 0) {
    d["min_real_vector"] = Eigen::VectorXcd(rep.min_real_vector);
    d["nearest_zero_vector"] = Eigen::VectorXcd(rep.nearest_zero_vector);
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "mode operators around Landau solutions: assembly, spectra, "
            "small-sigma asymptotics";

  py::class_<Params>(m, "Params")
      .def(py::init<double, double, int, int>(), py::arg("a"),
           py::arg("sigma"), py::arg("n"), py::arg("N"))
      .def_readonly("a", &Params::a)
      .def_readonly("sigma", &Params::sigma)
      .def_readonly("n", &Params::n)
      .def_readonly("N", &Params::N)
      .def_readonly("delta", &Params::delta)
      .def("__repr__", [](const Params& p) {
        return "Params(a=" + std::to_string(p.a) +
               ", sigma=" + std::to_string(p.sigma) +
               ", n=" + std::to_string(p.n) + ", N=" + std::to_string(p.N) +
               ")";
      });

  // closed forms of the Landau family
  m.def("psi", [](double a, double phi) {
    return psi(LandauParam(a), PolarAngle(phi));
  }, py::arg("a"), py::arg("phi"), "stream function 2 sin(phi)/(a - cos(phi))");
  m.def("d_a_psi", [](double a, double phi) {
    return d_a_psi(LandauParam(a), PolarAngle(phi));
  }, py::arg("a"), py::arg("phi"));
  m.def("a_psi", [](double a, double phi) {
    return a_psi(LandauParam(a), PolarAngle(phi));
  }, py::arg("a"), py::arg("phi"));
  m.def("u_tilde", [](double a, double phi) {
    return u_tilde(LandauParam(a), PolarAngle(phi));
  }, py::arg("a"), py::arg("phi"));
  m.def("beta0", [](double a) { return beta0(LandauParam(a)); }, py::arg("a"));
  m.def("f0", [](double a, double z) { return f0(LandauParam(a), z); },
        py::arg("a"), py::arg("z"));
  m.def("h0", [](double a, double z) { return h0(LandauParam(a), z); },
        py::arg("a"), py::arg("z"));
  m.def("sigma_from_lambda", &sigma_from_lambda, py::arg("lam"));

  m.def("grid_nodes", [](const Params& p) {
    return Eigen::VectorXd(Grid(p).nodes);
  }, py::arg("params"), "interior nodes phi_k = k pi/(N+1)");

  m.def("assemble", [](const std::string& op, const Params& p) {
    Grid g(p);
    return Eigen::MatrixXcd(assemble_by_name(op, p, g).entries);
  }, py::arg("op"), py::arg("params"),
     "dense matrix of one mode operator (A, B, C, E, L, M)");

  m.def("spectrum",
        [](const std::string& op, double a, double sigma, int n, int N,
           const std::string& form, bool vectors) {
          Params p(a, sigma, n, N);
          Grid g(p);
          SpectralReport rep;
          if (form == "generalized") {
            if (op != "L")
              throw std::invalid_argument(
                  "generalized form applies to the stream operator only");
            rep = spectrum_generalized(
                {assemble_A(p, g), assemble_B(p, g), assemble_C(p, g)},
                vectors);
          } else {
            rep = spectrum_reduced(assemble_by_name(op, p, g), vectors);
          }
          return report_dict(rep);
        },
        py::arg("op"), py::arg("a"), py::arg("sigma") = 0.0, py::arg("n") = 0,
        py::arg("N") = 320, py::arg("form") = "reduced",
        py::arg("vectors") = false,
        "full spectrum and diagnostics of one mode operator");

  m.def("kernel_residual", [](double a, int N) {
    auto r = kernel_residual(a, N);
    py::dict d;
    d["interior"] = r.interior;
    d["full"] = r.full;
    return d;
  }, py::arg("a"), py::arg("N"));

  m.def("apply_tilde_L0", [](double a, int N, const Eigen::VectorXd& H) {
    Params p(a, 0.0, 0, N);
    Grid g(p);
    return Eigen::VectorXd(apply_tilde_L0(a, g, H));
  }, py::arg("a"), py::arg("N"), py::arg("H"),
     "z-variable factorized form of the zero-mode stream operator");

  m.def("re_mu2", &re_mu2, py::arg("a"), py::arg("N"),
        "second-order small-sigma coefficient of the mode-1 eigenvalue");
  m.def("first_order_imaginary", [](double a, int N) {
    auto r = first_order_imaginary(a, N);
    py::dict d;
    d["im_mu1"] = r.im.mu;
    d["im_eta1"] = Eigen::VectorXd(r.im.eta);
    d["residual_norm"] = r.im.residual_norm;
    d["orthogonality"] = r.im.orthogonality;
    return d;
  }, py::arg("a"), py::arg("N"));
  m.def("small_sigma_consistency", &small_sigma_consistency, py::arg("a"),
        py::arg("sigma"), py::arg("N"));

  m.def("m_positivity_sweep",
        [](const std::vector<double>& a_list,
           const std::vector<double>& sigma_list, const std::vector<int>& n_list,
           int N) {
          auto rep = m_spectrum_positivity_sweep(a_list, sigma_list, n_list, N);
          py::list rows;
          for (const auto& r : rep.rows) {
            py::dict d;
            d["a"] = r.a;
            d["sigma"] = r.sigma;
            d["n"] = r.n;
            d["min_real"] = r.min_real;
            d["min_abs"] = r.min_abs;
            rows.append(d);
          }
          return py::make_tuple(rep.all_positive, rows);
        },
        py::arg("a_list"), py::arg("sigma_list"), py::arg("n_list"),
        py::arg("N"));

  m.def("weight_symmetry_defect",
        [](const std::string& kind, double a, int N, int trials) {
          WeightSpec w;
          if (kind == "symmetrizing")
            w.kind = WeightSpec::Symmetrizing;
          else if (kind == "unit")
            w.kind = WeightSpec::Unit;
          else
            throw std::invalid_argument("kind must be symmetrizing or unit");
          return weight_symmetry_defect(w, a, N, trials);
        },
        py::arg("kind"), py::arg("a"), py::arg("N"), py::arg("trials") = 10);
}
