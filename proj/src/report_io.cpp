#include "landau/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace landau {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

nlohmann::json report_to_json(const SpectralReport& report, bool stream_op) {
  nlohmann::json j;
  j["params"] = {{"a", report.params.a},
                 {"sigma", report.params.sigma},
                 {"n", report.params.n},
                 {"N", report.params.N},
                 {"form", to_string(report.form_used)}};
  auto& evs = j["eigenvalues"] = nlohmann::json::array();
  for (const auto& ev : report.eigenvalues)
    evs.push_back({ev.real(), ev.imag()});
  j["min_real"] = report.min_real;
  j["second_min_real"] = report.second_min_real;
  j["max_abs_imag"] = report.max_abs_imag;
  nlohmann::json nz;
  nz["value"] = {report.nearest_zero_value.real(),
                 report.nearest_zero_value.imag()};
  nz["cos_angle_unweighted"] = nullptr;
  nz["cos_angle_sin_weighted"] = nullptr;
  if (stream_op && report.min_real_vector.size() > 0) {
    const Grid grid(report.params);
    const Eigen::VectorXd dpsi = d_a_psi_samples(report.params.a, grid);
    nz["cos_angle_unweighted"] = cosine_angle(report.min_real_vector, dpsi);
    nz["cos_angle_sin_weighted"] =
        cosine_angle_weighted(report.min_real_vector, dpsi, grid.sin_phi);
  }
  j["nearest_zero"] = nz;
  return j;
}

std::string report_to_csv(const SpectralReport& report) {
  std::ostringstream os;
  os << "re,im\n";
  for (const auto& ev : report.eigenvalues)
    os << format_double(ev.real()) << ',' << format_double(ev.imag()) << '\n';
  return os.str();
}

std::string report_to_svg(const SpectralReport& report) {
  const int w = 640, h = 480, margin = 50;
  double re_lo = 0, re_hi = 0, im_lo = 0, im_hi = 0;
  for (const auto& ev : report.eigenvalues) {
    re_lo = std::min(re_lo, ev.real());
    re_hi = std::max(re_hi, ev.real());
    im_lo = std::min(im_lo, ev.imag());
    im_hi = std::max(im_hi, ev.imag());
  }
  if (re_hi == re_lo) re_hi = re_lo + 1;
  if (im_hi == im_lo) {
    im_lo -= 1;
    im_hi += 1;
  }
  auto x_of = [&](double re) {
    return margin + (re - re_lo) / (re_hi - re_lo) * (w - 2 * margin);
  };
  auto y_of = [&](double im) {
    return h - margin - (im - im_lo) / (im_hi - im_lo) * (h - 2 * margin);
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
     << "\" height=\"" << h << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes through zero when visible
  if (re_lo <= 0 && 0 <= re_hi)
    os << "<line x1=\"" << x_of(0) << "\" y1=\"" << margin << "\" x2=\""
       << x_of(0) << "\" y2=\"" << h - margin
       << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  if (im_lo <= 0 && 0 <= im_hi)
    os << "<line x1=\"" << margin << "\" y1=\"" << y_of(0) << "\" x2=\""
       << w - margin << "\" y2=\"" << y_of(0)
       << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  for (const auto& ev : report.eigenvalues)
    os << "<circle cx=\"" << x_of(ev.real()) << "\" cy=\"" << y_of(ev.imag())
       << "\" r=\"2\" fill=\"#1f77b4\"/>\n";
  os << "<circle cx=\"" << x_of(report.nearest_zero_value.real())
     << "\" cy=\"" << y_of(report.nearest_zero_value.imag())
     << "\" r=\"5\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"/>\n";
  os << "<text x=\"" << w / 2 << "\" y=\"" << h - 10
     << "\" text-anchor=\"middle\" font-size=\"12\">Re</text>\n";
  os << "<text x=\"12\" y=\"" << h / 2
     << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 12 "
     << h / 2 << ")\">Im</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace landau
