#include "hodge/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hodge {

namespace {

int total_degree(const Exponent &e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded-lex comparison: higher total degree first, then lexicographic.
bool graded_less(const Exponent &a, const Exponent &b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db)
    return da < db;
  return a < b;
}

} // namespace

Polynomial Polynomial::constant(int n, const Rational &c) {
  Polynomial p(n);
  p.add_term(Exponent(n, 0), c);
  return p;
}

Polynomial Polynomial::monomial(int n, Exponent e, const Rational &c) {
  if (static_cast<int>(e.size()) != n)
    throw std::invalid_argument("Polynomial::monomial: exponent length != n");
  for (int a : e)
    if (a < 0)
      throw std::invalid_argument("Polynomial::monomial: negative exponent");
  Polynomial p(n);
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::variable(int n, int axis) {
  Exponent e(n, 0);
  e.at(axis) = 1;
  return monomial(n, std::move(e));
}

Polynomial Polynomial::radius_squared(int n) {
  Polynomial p(n);
  for (int i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = 2;
    p.add_term(e, 1);
  }
  return p;
}

int Polynomial::degree() const {
  int d = kZeroPolynomialDegree;
  for (const auto &[e, c] : terms_)
    d = std::max(d, total_degree(e));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty())
    return true;
  int d = total_degree(terms_.begin()->first);
  for (const auto &[e, c] : terms_)
    if (total_degree(e) != d)
      return false;
  return true;
}

Rational Polynomial::coefficient(const Exponent &e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent &e, const Rational &c) {
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

Rational Polynomial::leading_coefficient() const {
  if (terms_.empty())
    return 0;
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it)
    if (graded_less(best->first, it->first))
      best = it;
  return best->second;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial p(n_);
  for (const auto &[e, c] : terms_)
    if (total_degree(e) == d)
      p.terms_.emplace(e, c);
  return p;
}

Polynomial Polynomial::derivative(int axis) const {
  if (axis < 0 || axis >= n_)
    throw std::invalid_argument("Polynomial::derivative: axis out of range");
  Polynomial p(n_);
  for (const auto &[e, c] : terms_) {
    if (e[axis] == 0)
      continue;
    Exponent f = e;
    f[axis] -= 1;
    p.add_term(f, c * e[axis]);
  }
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(n_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u)
      result = result * base;
    e >>= 1;
    if (e)
      base = base * base;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != n_)
    throw std::invalid_argument("Polynomial::evaluate: wrong point dimension");
  Rational sum = 0;
  for (const auto &[e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < e[i]; ++k)
        t *= x[i];
    sum += t;
  }
  return sum;
}

double Polynomial::evaluate(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n_)
    throw std::invalid_argument("Polynomial::evaluate: wrong point dimension");
  double sum = 0;
  for (const auto &[e, c] : terms_) {
    double t = c.get_d();
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < e[i]; ++k)
        t *= x[i];
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto &[e, c] : p.terms_)
    c = -c;
  return p;
}

void Polynomial::check_dim(const Polynomial &o) const {
  if (n_ != o.n_)
    throw std::invalid_argument("Polynomial: dimension mismatch");
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  check_dim(o);
  for (const auto &[e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
  check_dim(o);
  for (const auto &[e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

Polynomial &Polynomial::operator*=(const Rational &c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, v] : terms_)
    v *= c;
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  a.check_dim(b);
  Polynomial p(a.n_);
  Exponent e(a.n_);
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_) {
      for (int i = 0; i < a.n_; ++i)
        e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

Polynomial laplacian(const Polynomial &f) {
  Polynomial out(f.dim());
  for (const auto &[e, c] : f.terms()) {
    for (int i = 0; i < f.dim(); ++i) {
      if (e[i] < 2)
        continue;
      Exponent g = e;
      g[i] -= 2;
      out.add_term(g, -c * e[i] * (e[i] - 1));
    }
  }
  return out;
}

int is_polynomial_nilpotent(const Polynomial &f) {
  int m = 0;
  Polynomial g = f;
  while (!g.is_zero()) {
    g = laplacian(g);
    ++m;
  }
  return m;
}

namespace {

void enumerate(int n, int d, int axis, Exponent &cur, std::vector<Exponent> &out) {
  if (axis == n - 1) {
    cur[axis] = d;
    out.push_back(cur);
    return;
  }
  for (int a = d; a >= 0; --a) {
    cur[axis] = a;
    enumerate(n, d - a, axis + 1, cur, out);
  }
}

} // namespace

std::vector<Exponent> monomials_of_degree(int n, int d) {
  std::vector<Exponent> out;
  if (d < 0)
    return out;
  if (n == 0) {
    if (d == 0)
      out.emplace_back();
    return out;
  }
  Exponent cur(n, 0);
  enumerate(n, d, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace hodge
