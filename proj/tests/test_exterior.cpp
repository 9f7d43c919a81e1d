#include "hodge/algebra_suite.hpp"
#include "hodge/exterior.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hodge;

namespace {

FormIndex ix(int n, std::vector<int> axes) { return FormIndex(n, std::move(axes)); }

// Parity of the permutation that sorts seq, by counting inversions.
int inversion_sign(const std::vector<int> &seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j])
        ++inv;
  return inv % 2 ? -1 : 1;
}

long choose(int a, int b) {
  long r = 1;
  for (int i = 1; i <= b; ++i)
    r = r * (a - b + i) / i;
  return r;
}

}  // namespace

TEST_CASE("wedge of basis covectors") {
  CHECK(wedge_basis(ix(2, {0}), ix(2, {1})) == SignedIndex::of(1, ix(2, {0, 1})));
  CHECK(wedge_basis(ix(2, {1}), ix(2, {0})) == SignedIndex::of(-1, ix(2, {0, 1})));
  CHECK(wedge_basis(ix(2, {0}), ix(2, {0})).is_zero());
  CHECK_THROWS(wedge_basis(ix(2, {0}), ix(3, {1})));
}

TEST_CASE("hodge star on basis elements") {
  CHECK(hodge_star_basis(ix(2, {0})) == SignedIndex::of(1, ix(2, {1})));
  CHECK(hodge_star_basis(ix(2, {1})) == SignedIndex::of(-1, ix(2, {0})));
  CHECK(hodge_star_basis(ix(3, {0, 1})) == SignedIndex::of(1, ix(3, {2})));
  CHECK(hodge_star_basis(FormIndex::empty(3)) == SignedIndex::of(1, FormIndex::full(3)));
}

TEST_CASE("interior and exterior products") {
  CHECK(interior_basis(0, ix(2, {0, 1})) == SignedIndex::of(1, ix(2, {1})));
  CHECK(interior_basis(1, ix(2, {0, 1})) == SignedIndex::of(-1, ix(2, {0})));
  CHECK(interior_basis(0, ix(2, {1})).is_zero());
  CHECK(exterior_basis(0, ix(2, {1})) == SignedIndex::of(1, ix(2, {0, 1})));
  CHECK(exterior_basis(1, ix(2, {0})) == SignedIndex::of(-1, ix(2, {0, 1})));
  CHECK(exterior_basis(0, ix(2, {0})).is_zero());
}

TEST_CASE("form index validation and ordering") {
  CHECK_THROWS(ix(3, {1, 0}));
  CHECK_THROWS(ix(3, {0, 0}));
  CHECK_THROWS(ix(3, {3}));
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      auto b = basis(n, k);
      CHECK(static_cast<long>(b.size()) == choose(n, k));
      CHECK(std::is_sorted(b.begin(), b.end()));
    }
}

TEST_CASE("wedge sign matches inversion count") {
  for (int n = 1; n <= 6; ++n)
    for (int ka = 0; ka <= n; ++ka)
      for (int kb = 0; ka + kb <= n; ++kb)
        for (const auto &a : basis(n, ka))
          for (const auto &b : basis(n, kb)) {
            std::vector<int> cat = a.axes();
            cat.insert(cat.end(), b.axes().begin(), b.axes().end());
            std::vector<int> sorted = cat;
            std::sort(sorted.begin(), sorted.end());
            SignedIndex w = wedge_basis(a, b);
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
              CHECK(w.is_zero());
            } else {
              CHECK(w.sign == inversion_sign(cat));
              CHECK(w.index->axes() == sorted);
            }
          }
}

TEST_CASE("star squared and volume condition for n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto &a : basis(n, k)) {
        SignedIndex s = hodge_star_basis(a);
        std::vector<int> cat = a.axes();
        cat.insert(cat.end(), s.index->axes().begin(), s.index->axes().end());
        CHECK(s.sign == inversion_sign(cat));
        SignedIndex ss = then(s, [](const FormIndex &b) { return hodge_star_basis(b); });
        CHECK(ss.index == a);
        CHECK(ss.sign == ((k * (n - k)) % 2 ? -1 : 1));
      }
}

TEST_CASE("interior product through the star") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(interior_star_sign_exponent(n, k) == (n * k + n) % 2);
      for (const auto &a : basis(n, k))
        for (int mu = 0; mu < n; ++mu) {
          SignedIndex rhs = then(then(hodge_star_basis(a), [&](const FormIndex &b) { return exterior_basis(mu, b); }),
                                 [](const FormIndex &b) { return hodge_star_basis(b); });
          if (!rhs.is_zero())
            rhs.sign *= parity_sign(n * k + n);
          CHECK(interior_basis(mu, a) == rhs);
        }
    }
}

TEST_CASE("exterior suite passes and catches an injected fault") {
  AlgebraSuiteConfig cfg;
  cfg.n_max = 5;
  for (const auto &r : run_exterior_suite(cfg)) {
    INFO(r.name);
    CHECK(r.pass());
  }
  cfg.inject_fault = "anticommutation";
  bool caught = false;
  for (const auto &r : run_exterior_suite(cfg))
    if (r.name == "anticommutation")
      caught = !r.pass();
  CHECK(caught);
}
