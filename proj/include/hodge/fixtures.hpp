#pragma once

#include "hodge/grid.hpp"
#include "hodge/polyform.hpp"

#include <cstdint>
#include <random>

namespace hodge {

// Deterministic generator: mt19937_64 bits turned into numbers by hand so the
// stream is identical across standard library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }
  double uniform();                      // [0, 1)
  double normal();                       // Box-Muller
  long integer(long lo, long hi);        // inclusive

private:
  std::mt19937_64 eng_;
};

// Real band-limited k-form: spectrum supported in |j|_inf <= N/8 with a
// Gaussian envelope of width N/16, no zero mode, unit L2 norm.
GridForm random_bandlimited_form(const GridSpec &spec, int k, std::uint64_t seed);

// exp(-|x|^2 / (2 sigma^2)) centered at the origin.
GridForm gaussian_bump(const GridSpec &spec, double sigma);

// Each component is c_I * exp(-|x - s_I|^2 / (2 sigma^2)) with random
// c_I in [0.5, 1.5] and offsets |s_I|_inf <= sigma/2; generically neither
// closed nor coclosed.
GridForm gaussian_form(const GridSpec &spec, int k, double sigma, std::uint64_t seed);

// d of a random band-limited (k-1)-form / delta of a random (k+1)-form,
// normalized to unit L2 norm.
GridForm exact_fixture(const GridSpec &spec, int k, std::uint64_t seed);
GridForm coexact_fixture(const GridSpec &spec, int k, std::uint64_t seed);

// Sparse random polynomial k-form: up to max_terms terms per component,
// total degree <= max_degree, coefficients p/q with |p| <= 5, 1 <= q <= 4.
PolyForm random_polyform(int n, int k, int max_degree, std::uint64_t seed, int max_terms = 4);

} // namespace hodge
