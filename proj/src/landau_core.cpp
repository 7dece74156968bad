#include "landau/landau_core.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace landau {

LandauParam::LandauParam(double a_) : a(a_) {
  if (!(a > 1.0 + 1e-12))
    throw std::invalid_argument("LandauParam: require a > 1, got " +
                                std::to_string(a_));
}

PolarAngle::PolarAngle(double phi_) : phi(phi_) {
  if (!(phi >= 0.0 && phi <= std::numbers::pi))
    throw std::invalid_argument("PolarAngle: require 0 <= phi <= pi, got " +
                                std::to_string(phi_));
}

double PolarAngle::z() const { return std::cos(phi); }

double psi(LandauParam a, PolarAngle phi) {
  return 2.0 * std::sin(phi.phi) / (a.a - std::cos(phi.phi));
}

double d_a_psi(LandauParam a, PolarAngle phi) {
  const double d = a.a - std::cos(phi.phi);
  return -2.0 * std::sin(phi.phi) / (d * d);
}

std::pair<double, double> u_tilde(LandauParam a, PolarAngle phi) {
  const double d = a.a - std::cos(phi.phi);
  const double u_tau = 2.0 * ((a.a * a.a - 1.0) / (d * d) - 1.0);
  const double u_phi = -2.0 * std::sin(phi.phi) / d;
  return {u_tau, u_phi};
}

double a_psi(LandauParam a, PolarAngle phi) {
  const double d = a.a - std::cos(phi.phi);
  return 4.0 * (a.a * a.a - 1.0) * std::sin(phi.phi) / (d * d * d);
}

double beta0(LandauParam a) {
  const double x = a.a;
  return 16.0 * std::numbers::pi *
         (x + 0.5 * x * x * std::log((x - 1.0) / (x + 1.0)) +
          4.0 * x / (3.0 * (x * x - 1.0)));
}

double f0(LandauParam a, double z) {
  if (!(z >= -1.0 && z <= 1.0))
    throw std::invalid_argument("f0: require -1 <= z <= 1");
  return 2.0 * (1.0 - z * z) / (a.a - z);
}

double h0(LandauParam a, double z) {
  if (!(z >= -1.0 && z <= 1.0))
    throw std::invalid_argument("h0: require -1 <= z <= 1");
  const double d = a.a - z;
  return -2.0 * (1.0 - z * z) / (d * d);
}

}  // namespace landau
