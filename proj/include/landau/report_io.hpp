#pragma once

#include <string>

#include "json.hpp"
#include "landau/eigensolve.hpp"

namespace landau {

// Report serialization. JSON layout:
//   {"params": {"a","sigma","n","N","form"},
//    "eigenvalues": [[re, im], ...],
//    "min_real", "second_min_real", "max_abs_imag",
//    "nearest_zero": {"value": [re, im],
//                     "cos_angle_unweighted", "cos_angle_sin_weighted"}}
// The cosine fields compare the min-real eigenvector against sampled d_a Psi
// and are null when no eigenvector was computed or the operator is not the
// stream operator.
nlohmann::json report_to_json(const SpectralReport& report, bool stream_op);

// CSV with header "re,im", 17 significant digits.
std::string report_to_csv(const SpectralReport& report);

// Static scatter of the eigenvalue cloud; the nearest-zero eigenvalue is
// highlighted.
std::string report_to_svg(const SpectralReport& report);

std::string format_double(double v);  // %.17g

}  // namespace landau
