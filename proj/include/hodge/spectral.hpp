#pragma once

#include "hodge/grid.hpp"
#include "hodge/polynomial.hpp"

#include <string>

namespace hodge {

// Scalar Fourier symbol sigma(xi), applied to every component.
struct MultiplierSpec {
  enum class Kind { Identity, RieszPotential, RieszDirection, Laplacian, Poly };

  Kind kind = Kind::Identity;
  double alpha = 0.0;  // RieszPotential: |xi|^{-alpha}
  int axis = 0;        // RieszDirection: i xi_axis / |xi|
  Polynomial poly{1};  // Poly: symbol of the operator p(d_1, ..., d_n)

  static MultiplierSpec identity() { return {}; }
  static MultiplierSpec riesz_potential(double alpha);
  static MultiplierSpec riesz_direction(int axis);
  static MultiplierSpec laplacian() { return {Kind::Laplacian, 0.0, 0, Polynomial{1}}; }
  // Constant-coefficient operator p(d): symbol p(-i xi), e.g. x1 -> d_1.
  static MultiplierSpec poly_symbol(Polynomial p);

  // True when the coefficient at xi = 0 is forced to zero (symbols that are
  // singular or non-polynomial at the origin).
  bool zeroes_zero_mode() const;
  // sigma at a wavevector; xi must be nonzero if zeroes_zero_mode().
  Complex symbol(const double *xi, int n) const;
  std::string describe() const;
};

// Multiplies every component by sigma evaluated on the effective wavevector
// (Nyquist components zeroed). Where that wavevector vanishes, symbols with
// zeroes_zero_mode() give 0.
SpectralForm apply_scalar_multiplier(const SpectralForm &F, const MultiplierSpec &m);

// Zeroes every coefficient whose effective wavevector vanishes (the mean and
// pure-Nyquist modes); returns the spectral L2 norm removed.
double remove_zero_modes(SpectralForm &F);

SpectralForm spectral_partial(int mu, const SpectralForm &F);
SpectralForm spectral_epsilon(int mu, const SpectralForm &F);
SpectralForm spectral_iota(int mu, const SpectralForm &F);
SpectralForm spectral_star(const SpectralForm &F);

SpectralForm spectral_d(const SpectralForm &F);
SpectralForm spectral_delta(const SpectralForm &F);
SpectralForm spectral_laplacian(const SpectralForm &F);
SpectralForm riesz_potential(double alpha, const SpectralForm &F);
SpectralForm riesz_direction(int axis, const SpectralForm &F);

// R = d I^1, R* = delta I^1
SpectralForm riesz_R(const SpectralForm &F);
SpectralForm riesz_Rstar(const SpectralForm &F);
// E = R R*, E* = R* R
SpectralForm projector_E(const SpectralForm &F);
SpectralForm projector_Estar(const SpectralForm &F);
// U = I^2 delta, U* = I^2 d
SpectralForm potential_U(const SpectralForm &F);
SpectralForm potential_Ustar(const SpectralForm &F);

struct HodgeDecomposition {
  GridForm alpha;  // U theta, degree k-1
  GridForm beta;   // U* theta, degree k+1
  double residual = 0.0;        // |theta - d alpha - delta beta|_2 / |theta|_2
  double theta_norm = 0.0;      // of the projected input
  double alpha_norm = 0.0;
  double beta_norm = 0.0;
  double removed_mean = 0.0;    // L2 norm of the projected-out zero modes
  bool mean_projected = false;  // removed_mean was above roundoff
  bool zero_input = false;
  double imag_residue = 0.0;
};

HodgeDecomposition hodge_decompose(const GridForm &theta);

} // namespace hodge
