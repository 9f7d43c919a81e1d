#include "hodge/grid.hpp"

#include "hodge/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hodge {

void GridSpec::validate() const {
  if (n < 1 || n > 4)
    throw std::invalid_argument("GridSpec: dimension must be in [1, 4]");
  if (N < 2 || !is_power_of_two(N))
    throw std::invalid_argument("GridSpec: N must be a power of two >= 2");
  if (!(L > 0) || !std::isfinite(L))
    throw std::invalid_argument("GridSpec: box length must be positive and finite");
}

std::size_t GridSpec::size() const {
  std::size_t s = 1;
  for (int a = 0; a < n; ++a)
    s *= N;
  return s;
}

long GridSpec::signed_index(std::size_t j) const {
  long jj = static_cast<long>(j);
  long nn = static_cast<long>(N);
  return jj < nn / 2 ? jj : jj - nn;
}

double GridSpec::wavenumber(std::size_t j) const {
  return 2.0 * std::numbers::pi / L * static_cast<double>(signed_index(j));
}

double GridSpec::effective_wavenumber(std::size_t j) const {
  return j == N / 2 ? 0.0 : wavenumber(j);
}

void GridSpec::unravel(std::size_t flat, std::size_t *idx) const {
  for (int a = n - 1; a >= 0; --a) {
    idx[a] = flat % N;
    flat /= N;
  }
}

std::size_t GridSpec::ravel(const std::size_t *idx) const {
  std::size_t flat = 0;
  for (int a = 0; a < n; ++a)
    flat = flat * N + idx[a];
  return flat;
}

namespace {

// (-1)^{sum of multi-index}; shifts the DFT so sample 0 sits at -L/2.
std::vector<double> checkerboard(const GridSpec &spec) {
  std::vector<double> s(spec.size());
  std::size_t idx[4];
  for (std::size_t f = 0; f < s.size(); ++f) {
    spec.unravel(f, idx);
    std::size_t sum = 0;
    for (int a = 0; a < spec.n; ++a)
      sum += idx[a];
    s[f] = (sum % 2) ? -1.0 : 1.0;
  }
  return s;
}

template <class T, class F>
void for_each_component(std::map<FormIndex, std::vector<T>> &comps, F &&fn) {
  std::vector<std::vector<T> *> slots;
  for (auto &[idx, v] : comps)
    slots.push_back(&v);
  parallel_for(slots.size(), [&](std::size_t i) { fn(*slots[i]); });
}

} // namespace

SpectralForm fft_form(const GridForm &f) {
  f.spec.validate();
  SpectralForm out(f.spec, f.k);
  const auto sign = checkerboard(f.spec);
  const double scale = std::pow(f.spec.h(), f.spec.n);
  std::vector<std::pair<const std::vector<double> *, std::vector<Complex> *>> work;
  for (auto &[idx, v] : out.components)
    work.emplace_back(&f.components.at(idx), &v);
  parallel_for(work.size(), [&](std::size_t c) {
    const auto &src = *work[c].first;
    auto &dst = *work[c].second;
    for (std::size_t i = 0; i < src.size(); ++i)
      dst[i] = Complex(src[i], 0.0);
    fft_nd(dst, f.spec.n, f.spec.N, +1);
    for (std::size_t i = 0; i < dst.size(); ++i)
      dst[i] *= scale * sign[i];
  });
  return out;
}

GridForm ifft_form(const SpectralForm &F, double *imag_residue) {
  F.spec.validate();
  GridForm out(F.spec, F.k);
  const auto sign = checkerboard(F.spec);
  const double scale = 1.0 / std::pow(F.spec.L, F.spec.n);
  std::vector<std::pair<const std::vector<Complex> *, std::vector<double> *>> work;
  for (auto &[idx, v] : out.components)
    work.emplace_back(&F.components.at(idx), &v);
  std::vector<double> max_im(work.size(), 0.0), max_val(work.size(), 0.0);
  parallel_for(work.size(), [&](std::size_t c) {
    std::vector<Complex> buf(*work[c].first);
    for (std::size_t i = 0; i < buf.size(); ++i)
      buf[i] *= sign[i];
    fft_nd(buf, F.spec.n, F.spec.N, -1);
    auto &dst = *work[c].second;
    for (std::size_t i = 0; i < buf.size(); ++i) {
      Complex z = buf[i] * scale;
      dst[i] = z.real();
      max_im[c] = std::max(max_im[c], std::abs(z.imag()));
      max_val[c] = std::max(max_val[c], std::abs(z));
    }
  });
  if (imag_residue) {
    double im = 0, val = 0;
    for (std::size_t c = 0; c < work.size(); ++c) {
      im = std::max(im, max_im[c]);
      val = std::max(val, max_val[c]);
    }
    *imag_residue = val > 0 ? im / val : 0.0;
  }
  return out;
}

double lp_norm(const GridForm &f, double p) {
  if (!(p >= 1.0))
    throw std::invalid_argument("lp_norm: p must be >= 1");
  const std::size_t size = f.spec.size();
  std::vector<double> mag2(size, 0.0);
  for (const auto &[idx, v] : f.components)
    for (std::size_t i = 0; i < size; ++i)
      mag2[i] += v[i] * v[i];
  if (std::isinf(p)) {
    double m = 0;
    for (double x : mag2)
      m = std::max(m, x);
    return std::sqrt(m);
  }
  double sum = 0;
  if (p == 2.0) {
    for (double x : mag2)
      sum += x;
  } else {
    for (double x : mag2)
      sum += std::pow(x, 0.5 * p);
  }
  return std::pow(sum * std::pow(f.spec.h(), f.spec.n), 1.0 / p);
}

double max_abs(const GridForm &f) { return lp_norm(f, std::numeric_limits<double>::infinity()); }

double inner_product(const GridForm &f, const GridForm &g) {
  if (!(f.spec == g.spec) || f.k != g.k)
    throw std::invalid_argument("inner_product: spec or degree mismatch");
  double sum = 0;
  for (const auto &[idx, v] : f.components) {
    const auto &w = g.components.at(idx);
    for (std::size_t i = 0; i < v.size(); ++i)
      sum += v[i] * w[i];
  }
  return sum * std::pow(f.spec.h(), f.spec.n);
}

double spectral_inner(const SpectralForm &F, const SpectralForm &G) {
  if (!(F.spec == G.spec) || F.k != G.k)
    throw std::invalid_argument("spectral_inner: spec or degree mismatch");
  double sum = 0;
  for (const auto &[idx, v] : F.components) {
    const auto &w = G.components.at(idx);
    for (std::size_t i = 0; i < v.size(); ++i)
      sum += v[i].real() * w[i].real() + v[i].imag() * w[i].imag();
  }
  return sum / std::pow(F.spec.L, F.spec.n);
}

double spectral_l2_norm(const SpectralForm &F) { return std::sqrt(spectral_inner(F, F)); }

GridForm sample_scalar(const GridSpec &spec, const std::function<double(const double *)> &f) {
  spec.validate();
  GridForm out(spec, 0);
  auto &v = out.components.begin()->second;
  std::size_t idx[4];
  double x[4];
  for (std::size_t i = 0; i < v.size(); ++i) {
    spec.unravel(i, idx);
    for (int a = 0; a < spec.n; ++a)
      x[a] = spec.coordinate(idx[a]);
    v[i] = f(x);
  }
  return out;
}

namespace {

// Trigonometric interpolation weights taking samples at x_i to values at
// t * x_m, for one axis.
std::vector<double> interpolation_matrix(const GridSpec &spec, double t) {
  const std::size_t N = spec.N;
  std::vector<double> w(N * N);
  const double base = 2.0 * std::numbers::pi / spec.L;
  for (std::size_t m = 0; m < N; ++m) {
    double y = t * spec.coordinate(m);
    for (std::size_t i = 0; i < N; ++i) {
      double dx = y - spec.coordinate(i);
      double s = 1.0 + std::cos(base * static_cast<double>(N / 2) * dx);
      for (std::size_t q = 1; q < N / 2; ++q)
        s += 2.0 * std::cos(base * static_cast<double>(q) * dx);
      w[m * N + i] = s / static_cast<double>(N);
    }
  }
  return w;
}

void apply_along_axis(const GridSpec &spec, int axis, const std::vector<double> &w,
                      std::vector<double> &data) {
  const std::size_t N = spec.N;
  std::size_t stride = 1;
  for (int a = spec.n - 1; a > axis; --a)
    stride *= N;
  std::vector<double> line(N), res(N);
  for (std::size_t block = 0; block < data.size(); block += N * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      double *base = data.data() + block + off;
      for (std::size_t i = 0; i < N; ++i)
        line[i] = base[i * stride];
      for (std::size_t m = 0; m < N; ++m) {
        double s = 0;
        for (std::size_t i = 0; i < N; ++i)
          s += w[m * N + i] * line[i];
        res[m] = s;
      }
      for (std::size_t m = 0; m < N; ++m)
        base[m * stride] = res[m];
    }
  }
}

// Fraction of the L2 mass outside the centered cube of half-width
// frac * L/2.
double mass_outside(const GridForm &f, double frac) {
  const auto &spec = f.spec;
  double inside = 0, total = 0;
  std::size_t idx[4];
  for (std::size_t i = 0; i < spec.size(); ++i) {
    spec.unravel(i, idx);
    bool in = true;
    for (int a = 0; a < spec.n; ++a)
      if (std::abs(spec.coordinate(idx[a])) > frac * 0.5 * spec.L)
        in = false;
    double m2 = 0;
    for (const auto &[k, v] : f.components)
      m2 += v[i] * v[i];
    total += m2;
    if (in)
      inside += m2;
  }
  return total > 0 ? std::sqrt(std::max(0.0, total - inside) / total) : 0.0;
}

// Spectral amplitude fraction in the outer band |j|_inf >= 3N/8.
double outer_band_fraction(const GridForm &f) {
  const auto F = fft_form(f);
  const auto &spec = f.spec;
  const long cut = static_cast<long>(3 * spec.N / 8);
  double outer = 0, total = 0;
  std::size_t idx[4];
  for (std::size_t i = 0; i < spec.size(); ++i) {
    spec.unravel(i, idx);
    bool out = false;
    for (int a = 0; a < spec.n; ++a)
      if (std::abs(spec.signed_index(idx[a])) >= cut)
        out = true;
    for (const auto &[k, v] : F.components) {
      double m2 = std::norm(v[i]);
      total += m2;
      if (out)
        outer += m2;
    }
  }
  return total > 0 ? std::sqrt(outer / total) : 0.0;
}

constexpr double kWrapThreshold = 1e-6;
constexpr double kAliasThreshold = 1e-4;

} // namespace

DilateResult dilate(const GridForm &f, int j) {
  f.spec.validate();
  const auto &spec = f.spec;
  if (std::abs(j) >= 30 || (std::size_t{1} << std::abs(j)) > spec.N)
    throw std::invalid_argument("dilate: |j| too large for grid");
  const double t = std::ldexp(1.0, j);
  const double form_factor = std::pow(t, f.k);
  DilateResult res;
  res.form = GridForm(spec, f.k);
  if (j == 0) {
    res.form = f;
    return res;
  }
  if (j > 0) {
    const long s = 1L << j;
    const long offset = (s - 1) * static_cast<long>(spec.N) / 2;
    std::size_t idx[4], src[4];
    for (std::size_t i = 0; i < spec.size(); ++i) {
      spec.unravel(i, idx);
      bool inside = true;
      for (int a = 0; a < spec.n; ++a) {
        long q = s * static_cast<long>(idx[a]) - offset;
        if (q < 0 || q >= static_cast<long>(spec.N))
          inside = false;
        src[a] = static_cast<std::size_t>(q);
      }
      if (!inside)
        continue;
      std::size_t from = spec.ravel(src);
      for (auto &[k, v] : res.form.components)
        v[i] = form_factor * f.components.at(k)[from];
    }
    res.leakage = outer_band_fraction(res.form);
    res.support_violation = res.leakage > kAliasThreshold;
    return res;
  }
  res.leakage = mass_outside(f, t);
  res.support_violation = res.leakage > kWrapThreshold;
  const auto w = interpolation_matrix(spec, t);
  for (auto &[k, v] : res.form.components) {
    v = f.components.at(k);
    for (int a = 0; a < spec.n; ++a)
      apply_along_axis(spec, a, w, v);
    for (auto &x : v)
      x *= form_factor;
  }
  return res;
}

} // namespace hodge
