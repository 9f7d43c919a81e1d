#pragma once

#include "hodge/grid.hpp"

#include <array>
#include <vector>

namespace hodge {

// gamma(n, alpha) = 2^alpha pi^{n/2} Gamma(alpha/2) / Gamma((n - alpha)/2),
// the normalization of the Riesz kernel |x|^{alpha-n} / gamma(n, alpha).
double gamma_constant(int n, double alpha);

struct PairingCheck {
  int n = 0;
  double alpha = 0, s = 0;
  double lhs = 0;  // int |xi|^{-alpha} exp(-s |xi|^2) dxi
  double rhs = 0;  // int k_alpha(x) (pi/s)^{n/2} exp(-|x|^2 / (4 s)) dx
  double relerr = 0;
  double quadrature_error = 0;  // largest estimated relative quadrature error
};

// Both sides reduced to radial integrals and evaluated by adaptive
// Gauss-Kronrod. Throws std::domain_error when quadrature does not converge.
PairingCheck gaussian_pairing_check(int n, double alpha, double s);

// Epstein zeta sum'_{k in Z^n} |k|^{-s} by its theta-function splitting
// (valid for all real s except 0 and n). For n = 1 this is 2 zeta(s).
double epstein_zeta(int n, double s);

enum class SingularCell { Lattice, Ball };

using GridPoint = std::array<std::size_t, 4>;

// Direct-space Riesz potential (1/gamma) sum_y |x - y|^{alpha - n} phi(y) h^n at
// grid points. The x = y cell gets weight -Z(n - alpha) h^alpha (lattice
// correction, Z the Epstein zeta) or the equal-volume-ball integral.
// Throws std::domain_error when phi is not concentrated in the central half
// of the box (the free-space sum would then disagree with the periodic one).
std::vector<double> direct_riesz_potential(const GridForm &phi, double alpha,
                                           const std::vector<GridPoint> &points,
                                           SingularCell cell = SingularCell::Lattice);

// Relative L1 mass of phi outside the centered cube of half-width L/4.
double outer_mass_fraction(const GridForm &phi);

// Truncated singular integral
//   c_n sum_{|x-y| > delta} (x_j - y_j) / |x - y|^{n+1} phi(y) h^n,
//   c_n = Gamma((n+1)/2) / pi^{(n+1)/2},
// evaluated by direct summation at the given points.
std::vector<double> truncated_riesz_at(const GridForm &phi, int j, double delta,
                                       const std::vector<GridPoint> &points);

// Same sum on every grid point (non-periodic convolution accelerated by a
// zero-padded FFT; identical to truncated_riesz_at up to roundoff).
GridForm truncated_riesz_transform(const GridForm &phi, int j, double delta);

// Number of consecutive moment orders 0, 1, 2, ... (up to mmax) for which
// every moment h^n sum x^mu phi with |mu| = order is below
// 1e-8 * |phi|_1 * L^{|mu|}. A Gaussian gives 0, Lap^m of a Gaussian 2m.
int moment_vanish_order(const GridForm &phi, int mmax);

} // namespace hodge
