#pragma once

#include <stdexcept>

namespace landau {

// Problem parameters for one mode computation: Landau family parameter a,
// radial frequency sigma, Fourier mode index n, and interior node count N.
// delta is derived, pi/(N+1). Every assembly and solve reads from here.
struct Params {
  double a = 2.0;
  double sigma = 1.0;
  int n = 0;
  int N = 100;
  double delta = 0.0;

  Params() : Params(2.0, 1.0, 0, 100) {}
  Params(double a_, double sigma_, int n_, int N_);

  // The mode terms only ever see the product n*sigma.
  double ns() const { return static_cast<double>(n) * sigma; }
};

// sigma = 2*pi / ln(lambda) for a discrete scaling factor lambda > 1.
double sigma_from_lambda(double lambda);

}  // namespace landau
