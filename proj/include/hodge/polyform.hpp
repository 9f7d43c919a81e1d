#pragma once

#include "hodge/exterior.hpp"
#include "hodge/polynomial.hpp"

#include <map>
#include <vector>

namespace hodge {

// Differential k-form on R^n with polynomial coefficients. Absent components
// are zero; stored components are never the zero polynomial. Degrees outside
// [0, n] are allowed and always hold the zero form (e.g. d of an n-form).
class PolyForm {
public:
  PolyForm(int n, int k) : n_(n), k_(k) {}

  static PolyForm scalar(const Polynomial &f);

  int dim() const { return n_; }
  int degree() const { return k_; }
  bool is_zero() const { return comps_.empty(); }
  const std::map<FormIndex, Polynomial> &components() const { return comps_; }

  Polynomial component(const FormIndex &idx) const;
  void add(const FormIndex &idx, const Polynomial &p);
  void add(const SignedIndex &s, const Polynomial &p);

  PolyForm operator-() const;
  PolyForm &operator+=(const PolyForm &o);
  PolyForm &operator-=(const PolyForm &o);
  PolyForm &operator*=(const Rational &c);
  friend PolyForm operator+(PolyForm a, const PolyForm &b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm &b) { return a -= b; }
  friend PolyForm operator*(const Rational &c, PolyForm a) { return a *= c; }
  friend bool operator==(const PolyForm &a, const PolyForm &b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.comps_ == b.comps_;
  }

private:
  void check(const PolyForm &o) const;

  int n_, k_;
  std::map<FormIndex, Polynomial> comps_;
};

PolyForm poly_partial(int mu, const PolyForm &f);
PolyForm poly_epsilon(int mu, const PolyForm &f);
PolyForm poly_iota(int mu, const PolyForm &f);
PolyForm poly_star(const PolyForm &f);

// d = sum_mu epsilon_mu o partial_mu
PolyForm poly_d(const PolyForm &f);
// delta = -sum_mu iota_mu o partial_mu
PolyForm poly_delta(const PolyForm &f);
// Componentwise -(sum_mu partial_mu^2); equals d delta + delta d.
PolyForm poly_laplacian(const PolyForm &f);

// One summand weight * |x|^{2m} * h of a harmonic expansion, with h
// homogeneous of degree nu, harmonic, and normalized to leading coefficient 1.
struct HarmonicTerm {
  int m = 0;
  int nu = 0;
  Rational weight;
  Polynomial h;
};

struct HarmonicExpansion {
  int n = 0;
  std::vector<HarmonicTerm> terms; // ordered by (m + nu/2 ... ) i.e. degree, then m

  Polynomial reconstruct() const;
};

// Unique expansion f = sum weight * |x|^{2m} h_{m,nu}. Each homogeneous
// degree is split by exact rational solves of
//   laplacian(p - |x|^2 q) = 0
// for q, recursing on q.
HarmonicExpansion harmonic_decompose(const Polynomial &f);

// Magnitude 2(m+1)(2m+2nu+n) of the radial lift identity
//   Lap(|x|^{2m+2} h) = |x|^{2m+2} Lap(h) - c |x|^{2m} h
// for homogeneous h of degree nu, with Lap = -(sum of second derivatives).
Rational radial_lift_constant(int n, int m, int nu);

// Particular solution g of laplacian(g) = f built from the harmonic
// expansion of f term by term.
Polynomial poly_inverse_laplacian(const Polynomial &f);
PolyForm poly_inverse_laplacian(const PolyForm &f);

struct HarmonicDimensionRow {
  int nu = 0;
  std::size_t monomials = 0;   // dim of homogeneous polynomials of degree nu
  std::size_t image_rank = 0;  // rank of the Laplacian on that space
  std::size_t harmonic_dim = 0;
};

// Rank-nullity table of the Laplacian restricted to homogeneous
// polynomials of degree nu = 0..dmax, by exact row reduction.
std::vector<HarmonicDimensionRow> kernel_dimension_audit(int n, int dmax);

} // namespace hodge
