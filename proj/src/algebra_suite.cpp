#include "hodge/algebra_suite.hpp"

#include "hodge/exterior.hpp"
#include "hodge/fixtures.hpp"
#include "hodge/polyform.hpp"

#include <map>
#include <stdexcept>

namespace hodge {

namespace {

using Combo = std::map<FormIndex, int>;

void add(Combo &c, const SignedIndex &s, int coeff = 1) {
  if (s.is_zero())
    return;
  int &v = c[*s.index];
  v += coeff * s.sign;
  if (v == 0)
    c.erase(*s.index);
}

Combo negate(Combo c) {
  for (auto &[k, v] : c)
    v = -v;
  return c;
}

class Suite {
public:
  explicit Suite(std::string fault) : fault_(std::move(fault)) {}

  bool faulty(const std::string &name) const { return fault_ == name; }

  void check(const std::string &name, bool ok) {
    auto &r = slot(name);
    ++r.cases;
    if (!ok)
      ++r.failures;
  }

  std::vector<IdentityResult> results() const { return order_; }

private:
  IdentityResult &slot(const std::string &name) {
    for (auto &r : order_)
      if (r.name == name)
        return r;
    order_.push_back({name, 0, 0});
    return order_.back();
  }

  std::string fault_;
  std::vector<IdentityResult> order_;
};

long binomial(long a, long b) {
  if (b < 0 || a < b || a < 0)
    return 0;
  long r = 1;
  for (long i = 1; i <= b; ++i)
    r = r * (a - b + i) / i;
  return r;
}

} // namespace

std::vector<std::string> algebra_identity_names() {
  return {"star_star",         "interior_star",       "volume",          "iota_iota",
          "eps_eps",           "anticommutation",     "d_squared",       "delta_squared",
          "laplacian_d_delta", "codifferential_star", "inverse_laplacian", "harmonic_reconstruction",
          "nilpotent_bound",   "kernel_audit"};
}

std::vector<IdentityResult> run_exterior_suite(const AlgebraSuiteConfig &cfg) {
  if (cfg.n_max < 1 || cfg.n_max > 8)
    throw std::invalid_argument("exterior suite: n_max must be in [1, 8]");
  Suite s(cfg.inject_fault);
  for (int n = 1; n <= cfg.n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const auto &a : basis(n, k)) {
        // star star = (-1)^{k(n-k)}
        SignedIndex ss = then(hodge_star_basis(a), [](const FormIndex &b) { return hodge_star_basis(b); });
        int expect = parity_sign(static_cast<long>(k) * (n - k));
        if (s.faulty("star_star"))
          ss.sign = -ss.sign;
        s.check("star_star", ss.sign == expect && ss.index == a);

        SignedIndex vol = wedge_basis(a, *hodge_star_basis(a).index);
        int vs = vol.sign * hodge_star_basis(a).sign;
        if (s.faulty("volume"))
          vs = -vs;
        s.check("volume", vs == 1 && vol.index == FormIndex::full(n));

        for (int mu = 0; mu < n; ++mu) {
          // iota_mu = (-1)^{nk+n} star eps_mu star
          SignedIndex lhs = interior_basis(mu, a);
          SignedIndex rhs = then(then(hodge_star_basis(a), [&](const FormIndex &b) { return exterior_basis(mu, b); }),
                                 [](const FormIndex &b) { return hodge_star_basis(b); });
          if (!rhs.is_zero())
            rhs.sign *= interior_star_sign_exponent(n, k) ? -1 : 1;
          if (s.faulty("interior_star") && !rhs.is_zero())
            rhs.sign = -rhs.sign;
          s.check("interior_star", lhs == rhs);

          SignedIndex ii = then(interior_basis(mu, a), [&](const FormIndex &b) { return interior_basis(mu, b); });
          SignedIndex ee = then(exterior_basis(mu, a), [&](const FormIndex &b) { return exterior_basis(mu, b); });
          bool ii_zero = ii.is_zero() != s.faulty("iota_iota");
          bool ee_zero = ee.is_zero() != s.faulty("eps_eps");
          s.check("iota_iota", ii_zero);
          s.check("eps_eps", ee_zero);

          for (int nu = 0; nu < n; ++nu) {
            Combo c;
            add(c, then(exterior_basis(nu, a), [&](const FormIndex &b) { return interior_basis(mu, b); }));
            add(c, then(interior_basis(mu, a), [&](const FormIndex &b) { return exterior_basis(nu, b); }));
            Combo expect_c;
            if (mu == nu)
              expect_c[a] = 1;
            if (s.faulty("anticommutation"))
              c = negate(c);
            s.check("anticommutation", c == expect_c);
          }
        }
      }
    }
  }
  return s.results();
}

std::vector<IdentityResult> run_polyform_suite(const AlgebraSuiteConfig &cfg) {
  if (cfg.poly_n_max < 1 || cfg.max_degree < 0 || cfg.corpus_size < 0)
    throw std::invalid_argument("polyform suite: invalid configuration");
  Suite s(cfg.inject_fault);
  for (int c = 0; c < cfg.corpus_size; ++c) {
    const int n = 1 + c % cfg.poly_n_max;
    const int k = (c / cfg.poly_n_max) % (n + 1);
    PolyForm f = random_polyform(n, k, cfg.max_degree, cfg.seed * 104729 + static_cast<std::uint64_t>(c));

    PolyForm dd = poly_d(poly_d(f));
    PolyForm xx = poly_delta(poly_delta(f));
    PolyForm lap = poly_laplacian(f);
    PolyForm dx = poly_d(poly_delta(f)) + poly_delta(poly_d(f));
    PolyForm sds = poly_star(poly_d(poly_star(f)));
    if ((n * k + n + 1) % 2)
      sds = -sds;
    PolyForm g = poly_inverse_laplacian(f);
    PolyForm back = poly_laplacian(g);

    if (s.faulty("laplacian_d_delta"))
      dx = -dx;
    if (s.faulty("codifferential_star"))
      sds = -sds;
    if (s.faulty("inverse_laplacian"))
      back = -back;

    s.check("d_squared", dd.is_zero() && !s.faulty("d_squared"));
    s.check("delta_squared", xx.is_zero() && !s.faulty("delta_squared"));
    s.check("laplacian_d_delta", dx == lap);
    s.check("codifferential_star", sds == poly_delta(f));
    s.check("inverse_laplacian", back == f);

    for (const auto &[idx, p] : f.components()) {
      HarmonicExpansion he = harmonic_decompose(p);
      bool ok = he.reconstruct() == p;
      for (const auto &t : he.terms)
        ok = ok && laplacian(t.h).is_zero() && t.h.is_homogeneous() && t.h.degree() == t.nu;
      if (s.faulty("harmonic_reconstruction"))
        ok = !ok;
      s.check("harmonic_reconstruction", ok);

      int m = is_polynomial_nilpotent(p);
      bool bound = p.is_zero() ? m == 0 : m <= p.degree() / 2 + 1;
      s.check("nilpotent_bound", bound != s.faulty("nilpotent_bound"));
    }
  }
  for (int n = 1; n <= cfg.audit_n_max; ++n) {
    for (const auto &row : kernel_dimension_audit(n, cfg.audit_degree)) {
      long expect = binomial(row.nu + n - 1, n - 1) - binomial(row.nu + n - 3, n - 1);
      bool ok = static_cast<long>(row.harmonic_dim) == expect;
      s.check("kernel_audit", ok != s.faulty("kernel_audit"));
    }
  }
  return s.results();
}

} // namespace hodge
