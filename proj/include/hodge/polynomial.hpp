#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <vector>

namespace hodge {

using Rational = mpq_class;
using Exponent = std::vector<int>;

// Degree reported for the zero polynomial.
inline constexpr int kZeroPolynomialDegree = -1;

// Multivariate polynomial in x_1..x_n with exact rational coefficients.
// No zero coefficient is ever stored.
class Polynomial {
public:
  explicit Polynomial(int n = 0) : n_(n) {}

  static Polynomial constant(int n, const Rational &c);
  static Polynomial monomial(int n, Exponent e, const Rational &c = 1);
  static Polynomial variable(int n, int axis);
  // |x|^2 = x_1^2 + ... + x_n^2
  static Polynomial radius_squared(int n);

  int dim() const { return n_; }
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponent, Rational> &terms() const { return terms_; }

  Rational coefficient(const Exponent &e) const;
  void add_term(const Exponent &e, const Rational &c);

  // Coefficient of the graded-lex largest monomial; zero for the zero
  // polynomial.
  Rational leading_coefficient() const;

  Polynomial homogeneous_part(int d) const;
  Polynomial derivative(int axis) const;
  Polynomial pow(unsigned e) const;

  Rational evaluate(std::span<const Rational> x) const;
  double evaluate(std::span<const double> x) const;

  Polynomial operator-() const;
  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  Polynomial &operator*=(const Rational &c);

  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational &c) { return a *= c; }
  friend Polynomial operator*(const Rational &c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

private:
  void check_dim(const Polynomial &o) const;

  int n_;
  std::map<Exponent, Rational> terms_;
};

// Hodge Laplacian on scalar coefficients: -(d_1^2 + ... + d_n^2).
Polynomial laplacian(const Polynomial &f);

// Smallest m >= 0 with laplacian^m f = 0.
int is_polynomial_nilpotent(const Polynomial &f);

// All exponent vectors of total degree d in n variables, lexicographic.
std::vector<Exponent> monomials_of_degree(int n, int d);

} // namespace hodge
