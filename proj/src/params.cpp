#include "landau/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace landau {

Params::Params(double a_, double sigma_, int n_, int N_)
    : a(a_), sigma(sigma_), n(n_), N(N_) {
  // a <= 1 + 1e-12 would put (a - cos phi) within rounding of zero near
  // phi = 0 and every coefficient blows up.
  if (!(a > 1.0 + 1e-12))
    throw std::invalid_argument("Params: require a > 1, got a=" +
                                std::to_string(a_));
  if (!(sigma >= 0.0))
    throw std::invalid_argument("Params: require sigma >= 0, got sigma=" +
                                std::to_string(sigma_));
  if (N < 3) throw std::invalid_argument("Params: require N >= 3");
  delta = std::numbers::pi / (N + 1);
}

double sigma_from_lambda(double lambda) {
  if (!(lambda > 1.0))
    throw std::invalid_argument("sigma_from_lambda: scaling factor must exceed 1");
  return 2.0 * std::numbers::pi / std::log(lambda);
}

}  // namespace landau
