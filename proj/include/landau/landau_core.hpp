#pragma once

#include <stdexcept>
#include <utility>

namespace landau {

// Landau family parameter a > 1.
struct LandauParam {
  double a;
  explicit LandauParam(double a_);
};

// Polar angle in [0, pi].
struct PolarAngle {
  double phi;
  explicit PolarAngle(double phi_);
  double z() const;  // z = cos(phi)
};

// Stream function Psi = 2 sin(phi) / (a - cos(phi)).
double psi(LandauParam a, PolarAngle phi);

// dPsi/da = -2 sin(phi) / (a - cos(phi))^2; spans the kernel of the
// zero-mode stream operator.
double d_a_psi(LandauParam a, PolarAngle phi);

// Scaled velocity rho*U = (U_tau, U_phi):
//   U_tau = 2((a^2-1)/(a-cos phi)^2 - 1),  U_phi = -2 sin(phi)/(a-cos phi).
std::pair<double, double> u_tilde(LandauParam a, PolarAngle phi);

// Scaled vorticity A Psi = 4 (a^2-1) sin(phi) / (a - cos(phi))^3.
double a_psi(LandauParam a, PolarAngle phi);

// Net force magnitude carried by U^a:
//   beta0 = 16 pi ( a + a^2/2 ln((a-1)/(a+1)) + 4a / (3(a^2-1)) ).
// Strictly decreasing, +inf as a -> 1+, -> 0 as a -> inf.
double beta0(LandauParam a);

// z-variable forms on [-1, 1] with z = cos(phi):
//   f0 = Psi sin(phi) = 2(1-z^2)/(a-z),
//   h0 = dPsi/da sin(phi) = -2(1-z^2)/(a-z)^2.
// h0 solves (1-z^2) H' + 2 z H - f0 H = 0 with H(+-1) = 0.
double f0(LandauParam a, double z);
double h0(LandauParam a, double z);

}  // namespace landau
