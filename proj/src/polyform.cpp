#include "hodge/polyform.hpp"

#include "hodge/rational_linalg.hpp"

#include <stdexcept>

namespace hodge {

PolyForm PolyForm::scalar(const Polynomial &f) {
  PolyForm out(f.dim(), 0);
  out.add(FormIndex::empty(f.dim()), f);
  return out;
}

Polynomial PolyForm::component(const FormIndex &idx) const {
  auto it = comps_.find(idx);
  return it == comps_.end() ? Polynomial(n_) : it->second;
}

void PolyForm::add(const FormIndex &idx, const Polynomial &p) {
  if (idx.dim() != n_ || idx.degree() != k_)
    throw std::invalid_argument("PolyForm::add: index does not match form");
  if (p.dim() != n_)
    throw std::invalid_argument("PolyForm::add: polynomial dimension mismatch");
  if (p.is_zero())
    return;
  auto [it, inserted] = comps_.try_emplace(idx, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero())
      comps_.erase(it);
  }
}

void PolyForm::add(const SignedIndex &s, const Polynomial &p) {
  if (s.is_zero())
    return;
  add(*s.index, s.sign > 0 ? p : -p);
}

PolyForm PolyForm::operator-() const {
  PolyForm out = *this;
  for (auto &[idx, p] : out.comps_)
    p = -p;
  return out;
}

void PolyForm::check(const PolyForm &o) const {
  if (n_ != o.n_ || k_ != o.k_)
    throw std::invalid_argument("PolyForm: dimension or degree mismatch");
}

PolyForm &PolyForm::operator+=(const PolyForm &o) {
  check(o);
  for (const auto &[idx, p] : o.comps_)
    add(idx, p);
  return *this;
}

PolyForm &PolyForm::operator-=(const PolyForm &o) {
  check(o);
  for (const auto &[idx, p] : o.comps_)
    add(idx, -p);
  return *this;
}

PolyForm &PolyForm::operator*=(const Rational &c) {
  if (sgn(c) == 0) {
    comps_.clear();
    return *this;
  }
  for (auto &[idx, p] : comps_)
    p *= c;
  return *this;
}

PolyForm poly_partial(int mu, const PolyForm &f) {
  PolyForm out(f.dim(), f.degree());
  for (const auto &[idx, p] : f.components())
    out.add(idx, p.derivative(mu));
  return out;
}

PolyForm poly_epsilon(int mu, const PolyForm &f) {
  PolyForm out(f.dim(), f.degree() + 1);
  for (const auto &[idx, p] : f.components())
    out.add(exterior_basis(mu, idx), p);
  return out;
}

PolyForm poly_iota(int mu, const PolyForm &f) {
  PolyForm out(f.dim(), f.degree() - 1);
  for (const auto &[idx, p] : f.components())
    out.add(interior_basis(mu, idx), p);
  return out;
}

PolyForm poly_star(const PolyForm &f) {
  PolyForm out(f.dim(), f.dim() - f.degree());
  for (const auto &[idx, p] : f.components())
    out.add(hodge_star_basis(idx), p);
  return out;
}

PolyForm poly_d(const PolyForm &f) {
  PolyForm out(f.dim(), f.degree() + 1);
  for (int mu = 0; mu < f.dim(); ++mu)
    out += poly_epsilon(mu, poly_partial(mu, f));
  return out;
}

PolyForm poly_delta(const PolyForm &f) {
  PolyForm out(f.dim(), f.degree() - 1);
  for (int mu = 0; mu < f.dim(); ++mu)
    out -= poly_iota(mu, poly_partial(mu, f));
  return out;
}

PolyForm poly_laplacian(const PolyForm &f) {
  PolyForm out(f.dim(), f.degree());
  for (const auto &[idx, p] : f.components())
    out.add(idx, laplacian(p));
  return out;
}

Polynomial HarmonicExpansion::reconstruct() const {
  Polynomial sum(n);
  const Polynomial r2 = Polynomial::radius_squared(n);
  for (const auto &t : terms)
    sum += t.weight * (r2.pow(static_cast<unsigned>(t.m)) * t.h);
  return sum;
}

namespace {

// Coefficient vector of a homogeneous polynomial in the monomial basis.
std::vector<Rational> coordinates(const Polynomial &p, const std::vector<Exponent> &mons) {
  std::vector<Rational> v(mons.size());
  for (std::size_t i = 0; i < mons.size(); ++i)
    v[i] = p.coefficient(mons[i]);
  return v;
}

// Solves laplacian(|x|^2 q) = laplacian(p) for q homogeneous of degree d-2;
// p - |x|^2 q is then the harmonic part of p.
Polynomial strip_harmonic(const Polynomial &p, int n, int d) {
  const auto mons = monomials_of_degree(n, d - 2);
  const Polynomial r2 = Polynomial::radius_squared(n);
  linalg::Matrix a(mons.size(), mons.size());
  for (std::size_t j = 0; j < mons.size(); ++j) {
    Polynomial col = laplacian(r2 * Polynomial::monomial(n, mons[j]));
    for (std::size_t i = 0; i < mons.size(); ++i)
      a(i, j) = col.coefficient(mons[i]);
  }
  auto q_coords = linalg::solve(a, coordinates(laplacian(p), mons));
  Polynomial q(n);
  for (std::size_t i = 0; i < mons.size(); ++i)
    q.add_term(mons[i], q_coords[i]);
  return q;
}

} // namespace

HarmonicExpansion harmonic_decompose(const Polynomial &f) {
  const int n = f.dim();
  HarmonicExpansion out;
  out.n = n;
  const Polynomial r2 = Polynomial::radius_squared(n);
  for (int d = 0; d <= f.degree(); ++d) {
    Polynomial p = f.homogeneous_part(d);
    int m = 0;
    int deg = d;
    while (!p.is_zero()) {
      Polynomial h = p;
      Polynomial q(n);
      if (deg >= 2) {
        q = strip_harmonic(p, n, deg);
        h = p - r2 * q;
      }
      if (!h.is_zero()) {
        Rational lead = h.leading_coefficient();
        h *= Rational(1 / lead);
        out.terms.push_back({m, deg, lead, std::move(h)});
      }
      p = std::move(q);
      ++m;
      deg -= 2;
    }
  }
  return out;
}

Rational radial_lift_constant(int n, int m, int nu) {
  return Rational(2 * (m + 1) * (2 * m + 2 * nu + n));
}

Polynomial poly_inverse_laplacian(const Polynomial &f) {
  const int n = f.dim();
  const Polynomial r2 = Polynomial::radius_squared(n);
  Polynomial g(n);
  for (const auto &t : harmonic_decompose(f).terms) {
    // Lap(|x|^{2m+2} h) = -c |x|^{2m} h for harmonic h.
    Rational coeff = -t.weight / radial_lift_constant(n, t.m, t.nu);
    g += coeff * (r2.pow(static_cast<unsigned>(t.m + 1)) * t.h);
  }
  return g;
}

PolyForm poly_inverse_laplacian(const PolyForm &f) {
  PolyForm out(f.dim(), f.degree());
  for (const auto &[idx, p] : f.components())
    out.add(idx, poly_inverse_laplacian(p));
  return out;
}

std::vector<HarmonicDimensionRow> kernel_dimension_audit(int n, int dmax) {
  std::vector<HarmonicDimensionRow> rows;
  for (int nu = 0; nu <= dmax; ++nu) {
    const auto src = monomials_of_degree(n, nu);
    const auto dst = monomials_of_degree(n, nu - 2);
    linalg::Matrix a(dst.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      Polynomial img = laplacian(Polynomial::monomial(n, src[j]));
      for (std::size_t i = 0; i < dst.size(); ++i)
        a(i, j) = img.coefficient(dst[i]);
    }
    std::size_t r = dst.empty() ? 0 : linalg::rank(a);
    rows.push_back({nu, src.size(), r, src.size() - r});
  }
  return rows;
}

} // namespace hodge
