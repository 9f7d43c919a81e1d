#pragma once

#include "hodge/exterior.hpp"
#include "hodge/fft.hpp"

#include <functional>
#include <limits>
#include <stdexcept>
#include <map>
#include <vector>

namespace hodge {

// Periodic cube [-L/2, L/2)^n sampled with N points per axis.
struct GridSpec {
  int n = 1;
  std::size_t N = 0;
  double L = 1.0;

  void validate() const;
  double h() const { return L / static_cast<double>(N); }
  std::size_t size() const;
  double coordinate(std::size_t m) const { return -0.5 * L + static_cast<double>(m) * h(); }
  // Alias of j in [-N/2, N/2).
  long signed_index(std::size_t j) const;
  double wavenumber(std::size_t j) const;
  // Same as wavenumber but 0 at the Nyquist index; every symbol is
  // evaluated on this vector so that odd and even symbols stay consistent.
  double effective_wavenumber(std::size_t j) const;
  void unravel(std::size_t flat, std::size_t *idx) const;
  std::size_t ravel(const std::size_t *idx) const;

  friend bool operator==(const GridSpec &, const GridSpec &) = default;
};

// Sampled k-form (T = double) or its Fourier coefficients (T = Complex).
// All C(n, k) components are present; degrees outside [0, n] are empty.
template <class T>
struct FieldForm {
  GridSpec spec;
  int k = 0;
  std::map<FormIndex, std::vector<T>> components;

  FieldForm() = default;
  FieldForm(const GridSpec &s, int degree) : spec(s), k(degree) {
    for (const auto &idx : basis(s.n, degree))
      components.emplace(idx, std::vector<T>(s.size(), T{}));
  }

  std::vector<T> &operator[](const FormIndex &idx) { return components.at(idx); }
  const std::vector<T> &operator[](const FormIndex &idx) const { return components.at(idx); }

  FieldForm &operator+=(const FieldForm &o) { return combine(o, 1.0); }
  FieldForm &operator-=(const FieldForm &o) { return combine(o, -1.0); }
  FieldForm &operator*=(double c) {
    for (auto &[idx, v] : components)
      for (auto &x : v)
        x *= c;
    return *this;
  }
  friend FieldForm operator+(FieldForm a, const FieldForm &b) { return a += b; }
  friend FieldForm operator-(FieldForm a, const FieldForm &b) { return a -= b; }
  friend FieldForm operator*(double c, FieldForm a) { return a *= c; }

  // Adds c * o; o must have the same spec and degree.
  FieldForm &combine(const FieldForm &o, double c);
};

using GridForm = FieldForm<double>;
using SpectralForm = FieldForm<Complex>;

SpectralForm fft_form(const GridForm &f);
// Real part of the inverse transform. If imag_residue is given it receives
// max|Im| / max|value| over all samples (0 for the zero form).
GridForm ifft_form(const SpectralForm &F, double *imag_residue = nullptr);

// (sum_x (sum_I |f_I(x)|^2)^{p/2} h^n)^{1/p}; p = infinity gives the max.
double lp_norm(const GridForm &f, double p);
double max_abs(const GridForm &f);
// h^n sum_x sum_I f_I g_I
double inner_product(const GridForm &f, const GridForm &g);
// Re (1/L^n) sum_j sum_I F_I conj(G_I); equals inner_product of the inverses.
double spectral_inner(const SpectralForm &F, const SpectralForm &G);
double spectral_l2_norm(const SpectralForm &F);

// Samples a scalar function of the physical coordinate.
GridForm sample_scalar(const GridSpec &spec, const std::function<double(const double *)> &f);

struct DilateResult {
  GridForm form;
  // Set when the input is not concentrated where dilation is faithful
  // (wrap-around for t < 1, aliasing for t > 1).
  bool support_violation = false;
  double leakage = 0.0;
};

// Pullback by x -> t x with t = 2^j: samples of f(t x) with every
// component multiplied by t^k.
DilateResult dilate(const GridForm &f, int j);

// ---- template implementation ----

template <class T>
FieldForm<T> &FieldForm<T>::combine(const FieldForm &o, double c) {
  if (!(spec == o.spec) || k != o.k)
    throw std::invalid_argument("FieldForm: spec or degree mismatch");
  for (auto &[idx, v] : components) {
    const auto &w = o.components.at(idx);
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] += c * w[i];
  }
  return *this;
}

} // namespace hodge
