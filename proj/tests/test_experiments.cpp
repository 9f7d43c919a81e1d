#include "hodge/experiments.hpp"
#include "hodge/fixtures.hpp"

#include <doctest.h>

#include <cmath>

using namespace hodge;

namespace {

const Criterion *find(const ExperimentReport &r, const std::string &name) {
  for (const auto &c : r.criteria)
    if (c.name == name)
      return &c;
  return nullptr;
}

bool has_flag(const ExperimentReport &r, const std::string &needle) {
  for (const auto &f : r.flags)
    if (f.find(needle) != std::string::npos)
      return true;
  return false;
}

}  // namespace

TEST_CASE("log-log slope fit") {
  std::vector<double> x{1, 2, 4, 8}, y;
  for (double t : x)
    y.push_back(3.0 * std::pow(t, -0.75));
  CHECK(fit_loglog_slope(x, y) == doctest::Approx(-0.75).epsilon(1e-12));
  CHECK_THROWS(fit_loglog_slope({1.0}, {1.0}));
  CHECK_THROWS(fit_loglog_slope({1.0, 2.0}, {1.0, -1.0}));
}

TEST_CASE("report bookkeeping") {
  ExperimentReport r;
  r.name = "demo";
  r.upper_bound("small", 0.5, 1.0);
  r.within("near", 1.04, 1.0, 0.05);
  CHECK(r.passed());
  r.within("far", 1.2, 1.0, 0.05);
  CHECK_FALSE(r.passed());
  r.runtime_seconds = 12.5;
  auto j = r.to_json();
  CHECK_FALSE(j.contains("runtime_seconds"));
  CHECK(j["criteria"].size() == 3);
  CHECK(j["criteria"][1]["tolerance"] == 0.05);
}

TEST_CASE("Gaffney identity route") {
  for (int n = 1; n <= 3; ++n) {
    GridSpec s{n, n == 3 ? std::size_t{16} : std::size_t{32}, 1.0};
    for (int k = 0; k <= n; ++k)
      for (int mu = 0; mu < n; ++mu) {
        ExperimentReport r = gaffney_check(random_bandlimited_form(s, k, 3 + k), mu);
        INFO("n=" << n << " k=" << k << " mu=" << mu);
        CHECK(r.passed());
        CHECK(find(r, "identity_residual")->value <= 1e-10);
        CHECK(find(r, "ratio_p2")->value <= 1 + 1e-10);
        CHECK(r.measurements["ratios"].size() == 3);
      }
  }
  GridSpec s{2, 32, 1.0};
  CHECK(has_flag(gaffney_check(exact_fixture(s, 1, 2), 0), "closed"));
  GridForm flat(s, 1);
  for (auto &[idx, v] : flat.components)
    std::fill(v.begin(), v.end(), 1.0);
  ExperimentReport z = gaffney_check(flat, 0);
  CHECK(has_flag(z, "zero denominator"));
  CHECK_THROWS(gaffney_check(flat, 2));
}

TEST_CASE("a priori identity route") {
  GridSpec s{3, 16, 1.0};
  for (int k = 0; k <= 3; ++k)
    for (int mu = 0; mu < 3; ++mu)
      for (int nu = 0; nu < 3; ++nu) {
        ExperimentReport r = apriori_check(random_bandlimited_form(s, k, 9 + k), mu, nu, 1.5);
        CHECK(r.passed());
        CHECK(find(r, "identity_residual")->value <= 1e-10);
        CHECK(find(r, "ratio_p2")->value <= 1 + 1e-10);
      }
  CHECK(has_flag(apriori_check(GridForm(s, 1), 0, 1, 2.0), "zero Laplacian"));
}

TEST_CASE("dilation scaling exponents") {
  struct Case {
    int n, k;
    double p, q;
    std::size_t N;
  };
  for (auto c : {Case{2, 1, 2.0, 2.0, 128}, Case{2, 0, 2.0, 4.0, 128}, Case{2, 1, 1.5, 6.0, 128},
                 Case{2, 1, 1.0, 2.0, 128}, Case{3, 1, 2.0, 6.0, 64}}) {
    GridSpec s{c.n, c.N, 1.0};
    double sigma = (c.n == 3 ? 6.0 : 8.0) * s.h();
    ExperimentReport r = sobolev_scaling(gaussian_form(s, c.k, sigma, 1), c.p, c.q, {0, 1, 2}, 0.02);
    INFO("n=" << c.n << " k=" << c.k << " p=" << c.p << " q=" << c.q);
    double expected = c.n / c.p - c.n / c.q - 1;
    CHECK(r.measurements["expected_exponent"].get<double>() == doctest::Approx(expected));
    CHECK(std::abs(r.measurements["fitted_exponent"].get<double>() - expected) <= 0.02);
    CHECK(r.passed());
  }
}

TEST_CASE("Sobolev constant probe") {
  ProbeConfig crit;
  crit.n = 2;
  crit.p = 1.5;
  crit.q = 6.0;
  ExperimentReport a = sobolev_constant_probe(crit);
  CHECK(a.passed());
  CHECK(a.measurements["variation"].get<double>() <= 0.10);

  ProbeConfig off = crit;
  off.q = 3.0;
  ExperimentReport b = sobolev_constant_probe(off);
  CHECK(b.passed());
  CHECK(b.measurements["monotone"].get<bool>());
  CHECK(b.measurements["variation"].get<double>() > 0.10);

  ProbeConfig one = crit;
  one.resolutions = {32, 64};
  CHECK_THROWS(sobolev_constant_probe(one));
}

TEST_CASE("cohomology branches") {
  CohomologyConfig c;
  c.n = 2;
  c.k = 1;
  c.N = 128;
  ExperimentReport r = cohomology_check(c);
  CHECK(r.passed());
  CHECK(r.measurements["positive_residual"].get<double>() <= 1e-10);
  CHECK(r.measurements["fitted_gamma"].get<double>() == doctest::Approx(1.0).epsilon(0.05));

  c.p = 1.5;
  c.q = 6.0;
  ExperimentReport z = cohomology_check(c);
  CHECK(std::abs(z.measurements["fitted_gamma"].get<double>()) <= 0.05);

  c.k = 0;
  CHECK(has_flag(cohomology_check(c), "positive branch vacuous"));
  c.k = 2;
  CHECK(has_flag(cohomology_check(c), "negative branch vacuous"));
}

TEST_CASE("suites") {
  CHECK(spectral_identity_suite(2, 32, 1).passed());
  CHECK(spectral_identity_suite(3, 16, 2).passed());
  ExperimentReport h = hodge_fixture_suite(2, 32, 9, 4);
  CHECK(h.passed());
  CHECK(h.measurements["exact_fixtures"] == 6);
  CHECK(pairing_suite().passed());
}

TEST_CASE("reports are reproducible") {
  GridSpec s{2, 32, 1.0};
  auto a = gaffney_check(random_bandlimited_form(s, 1, 5), 1).to_json().dump();
  auto b = gaffney_check(random_bandlimited_form(s, 1, 5), 1).to_json().dump();
  CHECK(a == b);
  CHECK(spectral_identity_suite(2, 16, 3).to_json() == spectral_identity_suite(2, 16, 3).to_json());
}
