#include "hodge/fixtures.hpp"

#include "hodge/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hodge {

double Rng::uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  double u1 = uniform();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

long Rng::integer(long lo, long hi) {
  if (hi < lo)
    throw std::invalid_argument("Rng::integer: empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(eng_() % span);
}

namespace {

GridForm normalized(GridForm f) {
  double norm = lp_norm(f, 2.0);
  if (norm > 0)
    f *= 1.0 / norm;
  return f;
}

} // namespace

GridForm random_bandlimited_form(const GridSpec &spec, int k, std::uint64_t seed) {
  spec.validate();
  Rng rng(seed);
  SpectralForm F(spec, k);
  const long band = static_cast<long>(spec.N / 8);
  const double width = static_cast<double>(spec.N) / 16.0;
  std::size_t idx[4];
  for (auto &[i, v] : F.components) {
    for (std::size_t f = 0; f < spec.size(); ++f) {
      spec.unravel(f, idx);
      bool inside = true, zero = true;
      double r2 = 0;
      for (int a = 0; a < spec.n; ++a) {
        long s = spec.signed_index(idx[a]);
        if (std::abs(s) > band)
          inside = false;
        if (s != 0)
          zero = false;
        r2 += static_cast<double>(s * s);
      }
      if (!inside || zero)
        continue;
      double env = std::exp(-0.5 * r2 / (width * width));
      double re = rng.normal();
      double im = rng.normal();
      v[f] = env * Complex(re, im);
    }
  }
  return normalized(ifft_form(F));
}

GridForm gaussian_bump(const GridSpec &spec, double sigma) {
  if (!(sigma > 0))
    throw std::invalid_argument("gaussian_bump: sigma must be positive");
  const double c = 0.5 / (sigma * sigma);
  const int n = spec.n;
  return sample_scalar(spec, [&](const double *x) {
    double r2 = 0;
    for (int a = 0; a < n; ++a)
      r2 += x[a] * x[a];
    return std::exp(-c * r2);
  });
}

GridForm gaussian_form(const GridSpec &spec, int k, double sigma, std::uint64_t seed) {
  if (!(sigma > 0))
    throw std::invalid_argument("gaussian_form: sigma must be positive");
  Rng rng(seed);
  GridForm out(spec, k);
  const double c = 0.5 / (sigma * sigma);
  const int n = spec.n;
  for (auto &[idx, v] : out.components) {
    double amp = 0.5 + rng.uniform();
    double shift[4] = {0, 0, 0, 0};
    for (int a = 0; a < n; ++a)
      shift[a] = (rng.uniform() - 0.5) * sigma;
    v = sample_scalar(spec, [&](const double *x) {
          double r2 = 0;
          for (int a = 0; a < n; ++a)
            r2 += (x[a] - shift[a]) * (x[a] - shift[a]);
          return amp * std::exp(-c * r2);
        }).components.begin()->second;
  }
  return out;
}

GridForm exact_fixture(const GridSpec &spec, int k, std::uint64_t seed) {
  if (k < 1 || k > spec.n)
    throw std::invalid_argument("exact_fixture: need 1 <= k <= n");
  auto pre = random_bandlimited_form(spec, k - 1, seed);
  return normalized(ifft_form(spectral_d(fft_form(pre))));
}

GridForm coexact_fixture(const GridSpec &spec, int k, std::uint64_t seed) {
  if (k < 0 || k >= spec.n)
    throw std::invalid_argument("coexact_fixture: need 0 <= k < n");
  auto pre = random_bandlimited_form(spec, k + 1, seed);
  return normalized(ifft_form(spectral_delta(fft_form(pre))));
}

PolyForm random_polyform(int n, int k, int max_degree, std::uint64_t seed, int max_terms) {
  Rng rng(seed);
  PolyForm out(n, k);
  for (const auto &idx : basis(n, k)) {
    long terms = rng.integer(0, max_terms);
    Polynomial p(n);
    for (long t = 0; t < terms; ++t) {
      long deg = rng.integer(0, max_degree);
      Exponent e(n, 0);
      for (long q = 0; q < deg; ++q)
        e[static_cast<std::size_t>(rng.integer(0, n - 1))] += 1;
      long num = rng.integer(-5, 5);
      long den = rng.integer(1, 4);
      Rational c{mpz_class(num), mpz_class(den)};
      c.canonicalize();
      p.add_term(e, c);
    }
    out.add(idx, p);
  }
  return out;
}

} // namespace hodge
