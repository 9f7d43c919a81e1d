#include "hodge/riesz_oracle.hpp"

#include "hodge/fft.hpp"
#include "hodge/parallel.hpp"
#include "hodge/polynomial.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hodge {

namespace {

constexpr double kPi = std::numbers::pi;

double sphere_area(int n) { return 2.0 * std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n); }

void check_riesz_range(int n, double alpha) {
  if (n < 1)
    throw std::invalid_argument("Riesz kernel: n must be positive");
  if (!(alpha > 0.0 && alpha < n))
    throw std::invalid_argument("Riesz kernel: need 0 < alpha < n");
}

struct Radial {
  double value;
  double error;
};

// int_0^inf r^{a-1} exp(-b r^2) dr after r = t^{1/a}, which removes the
// endpoint singularity: (1/a) int_0^inf exp(-b t^{2/a}) dt.
Radial radial_moment(double a, double b) {
  auto f = [&](double t) { return std::exp(-b * std::pow(t, 2.0 / a)) / a; };
  double err = 0;
  double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, 0.0, std::numeric_limits<double>::infinity(), 15, 1e-12, &err);
  return {v, std::abs(v) > 0 ? err / std::abs(v) : err};
}

} // namespace

double gamma_constant(int n, double alpha) {
  check_riesz_range(n, alpha);
  return std::pow(2.0, alpha) * std::pow(kPi, 0.5 * n) * std::tgamma(0.5 * alpha) /
         std::tgamma(0.5 * (n - alpha));
}

PairingCheck gaussian_pairing_check(int n, double alpha, double s) {
  check_riesz_range(n, alpha);
  if (!(s > 0))
    throw std::invalid_argument("gaussian_pairing_check: s must be positive");
  PairingCheck c;
  c.n = n;
  c.alpha = alpha;
  c.s = s;
  const double area = sphere_area(n);
  Radial l = radial_moment(n - alpha, s);
  Radial r = radial_moment(alpha, 1.0 / (4.0 * s));
  c.lhs = area * l.value;
  c.rhs = std::pow(kPi / s, 0.5 * n) * area * r.value / gamma_constant(n, alpha);
  c.relerr = std::abs(c.lhs - c.rhs) / std::abs(c.rhs);
  c.quadrature_error = std::max(l.error, r.error);
  if (!(c.quadrature_error < 1e-9))
    throw std::domain_error("gaussian_pairing_check: quadrature did not converge");
  return c;
}

double epstein_zeta(int n, double s) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("epstein_zeta: n must be in [1, 4]");
  if (s == 0.0 || s == static_cast<double>(n))
    throw std::domain_error("epstein_zeta: pole");
  constexpr int K = 6;
  const double a = 0.5 * s, b = 0.5 * (n - s);
  // Upper incomplete gamma, continued to p <= 0 by the downward recurrence
  // Gamma(p, x) = (Gamma(p + 1, x) - x^p e^{-x}) / p; s > n needs this.
  std::function<double(double, double)> upper = [&upper](double p, double x) {
    if (p > 0)
      return boost::math::tgamma(p, x);
    if (p == 0)
      return boost::math::expint(1, x);
    return (upper(p + 1.0, x) - std::pow(x, p) * std::exp(-x)) / p;
  };
  double total = 2.0 / (s - n) - 2.0 / s;
  int k[4] = {0, 0, 0, 0};
  long count = 1;
  for (int i = 0; i < n; ++i)
    count *= 2 * K + 1;
  for (long flat = 0; flat < count; ++flat) {
    long rest = flat;
    long q = 0;
    for (int i = 0; i < n; ++i) {
      k[i] = static_cast<int>(rest % (2 * K + 1)) - K;
      rest /= 2 * K + 1;
      q += static_cast<long>(k[i]) * k[i];
    }
    if (q == 0)
      continue;
    double x = kPi * static_cast<double>(q);
    total += upper(a, x) * std::pow(x, -a) + upper(b, x) * std::pow(x, -b);
  }
  return std::pow(kPi, a) / std::tgamma(a) * total;
}

double outer_mass_fraction(const GridForm &phi) {
  const auto &spec = phi.spec;
  double inside = 0, total = 0;
  std::size_t idx[4];
  for (const auto &[k, v] : phi.components) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      spec.unravel(i, idx);
      bool in = true;
      for (int a = 0; a < spec.n; ++a)
        if (std::abs(spec.coordinate(idx[a])) > 0.25 * spec.L)
          in = false;
      total += std::abs(v[i]);
      if (in)
        inside += std::abs(v[i]);
    }
  }
  return total > 0 ? (total - inside) / total : 0.0;
}

namespace {

constexpr double kMarginThreshold = 1e-2;

const std::vector<double> &scalar_data(const GridForm &phi, const char *who) {
  if (phi.k != 0 || phi.components.size() != 1)
    throw std::invalid_argument(std::string(who) + ": expected a 0-form");
  phi.spec.validate();
  return phi.components.begin()->second;
}

// Offsets d in [-(N-1), N-1]^n, flattened with stride (2N-1).
struct OffsetTable {
  const GridSpec &spec;
  std::size_t width;
  std::vector<double> values;
  std::vector<std::size_t> stride;

  template <class F>
  OffsetTable(const GridSpec &s, F &&kernel) : spec(s), width(2 * s.N - 1), stride(s.n) {
    std::size_t total = 1;
    for (int a = s.n - 1; a >= 0; --a) {
      stride[a] = total;
      total *= width;
    }
    values.resize(total);
    long d[4];
    for (std::size_t f = 0; f < total; ++f) {
      std::size_t rest = f;
      for (int a = s.n - 1; a >= 0; --a) {
        d[a] = static_cast<long>(rest % width) - static_cast<long>(s.N - 1);
        rest /= width;
      }
      values[f] = kernel(d);
    }
  }

  // Sum over sources m of K(p - m) * data[m].
  double convolve_at(const std::vector<double> &data, const GridPoint &p,
                     const std::vector<std::size_t> &source_offset) const {
    std::size_t base = 0;
    for (int a = 0; a < spec.n; ++a)
      base += (p[a] + spec.N - 1) * stride[a];
    double sum = 0;
    for (std::size_t m = 0; m < data.size(); ++m)
      sum += values[base - source_offset[m]] * data[m];
    return sum;
  }

  std::vector<std::size_t> source_offsets() const {
    std::vector<std::size_t> off(spec.size());
    std::size_t idx[4];
    for (std::size_t m = 0; m < off.size(); ++m) {
      spec.unravel(m, idx);
      std::size_t o = 0;
      for (int a = 0; a < spec.n; ++a)
        o += idx[a] * stride[a];
      off[m] = o;
    }
    return off;
  }
};

void check_points(const GridSpec &spec, const std::vector<GridPoint> &points) {
  for (const auto &p : points)
    for (int a = 0; a < spec.n; ++a)
      if (p[a] >= spec.N)
        throw std::invalid_argument("grid point out of range");
}

std::vector<double> evaluate_points(const OffsetTable &table, const std::vector<double> &data,
                                    const std::vector<GridPoint> &points, double scale) {
  const auto offsets = table.source_offsets();
  std::vector<double> out(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    out[i] = scale * table.convolve_at(data, points[i], offsets);
  });
  return out;
}

} // namespace

std::vector<double> direct_riesz_potential(const GridForm &phi, double alpha,
                                           const std::vector<GridPoint> &points, SingularCell cell) {
  const auto &data = scalar_data(phi, "direct_riesz_potential");
  const auto &spec = phi.spec;
  const int n = spec.n;
  check_riesz_range(n, alpha);
  check_points(spec, points);
  if (outer_mass_fraction(phi) > kMarginThreshold)
    throw std::domain_error("direct_riesz_potential: phi is not concentrated in the central half box");
  const double h = spec.h();
  double center;
  if (cell == SingularCell::Lattice) {
    center = -epstein_zeta(n, n - alpha) * std::pow(h, alpha);
  } else {
    double ball_volume = std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
    double rho = h / std::pow(ball_volume, 1.0 / n);
    center = sphere_area(n) * std::pow(rho, alpha) / alpha;
  }
  const double hn = std::pow(h, n);
  OffsetTable table(spec, [&](const long *d) {
    double r2 = 0;
    for (int a = 0; a < n; ++a)
      r2 += static_cast<double>(d[a] * d[a]);
    if (r2 == 0)
      return center;
    return std::pow(r2 * h * h, 0.5 * (alpha - n)) * hn;
  });
  return evaluate_points(table, data, points, 1.0 / gamma_constant(n, alpha));
}

namespace {

OffsetTable truncated_kernel(const GridSpec &spec, int j, double delta) {
  const int n = spec.n;
  const double h = spec.h();
  const double c = std::tgamma(0.5 * (n + 1)) / std::pow(kPi, 0.5 * (n + 1));
  const double hn = std::pow(h, n);
  return OffsetTable(spec, [&, j](const long *d) {
    double r2 = 0;
    for (int a = 0; a < n; ++a)
      r2 += static_cast<double>(d[a] * d[a]);
    double r = std::sqrt(r2) * h;
    if (r <= delta)
      return 0.0;
    return c * static_cast<double>(d[j]) * h / std::pow(r, n + 1) * hn;
  });
}

void check_truncation(const GridSpec &spec, int j, double delta) {
  if (j < 0 || j >= spec.n)
    throw std::invalid_argument("truncated Riesz: axis out of range");
  if (!(delta > spec.h()))
    throw std::invalid_argument("truncated Riesz: delta must exceed the grid spacing");
}

} // namespace

std::vector<double> truncated_riesz_at(const GridForm &phi, int j, double delta,
                                       const std::vector<GridPoint> &points) {
  const auto &data = scalar_data(phi, "truncated_riesz_at");
  check_truncation(phi.spec, j, delta);
  check_points(phi.spec, points);
  return evaluate_points(truncated_kernel(phi.spec, j, delta), data, points, 1.0);
}

GridForm truncated_riesz_transform(const GridForm &phi, int j, double delta) {
  const auto &data = scalar_data(phi, "truncated_riesz_transform");
  const auto &spec = phi.spec;
  check_truncation(spec, j, delta);
  const int n = spec.n;
  const std::size_t M = 2 * spec.N;
  OffsetTable table = truncated_kernel(spec, j, delta);

  std::size_t padded = 1;
  for (int a = 0; a < n; ++a)
    padded *= M;
  std::vector<Complex> kern(padded, 0.0), src(padded, 0.0);
  auto padded_flat = [&](const long *d) {
    std::size_t f = 0;
    for (int a = 0; a < n; ++a)
      f = f * M + static_cast<std::size_t>((d[a] % static_cast<long>(M) + static_cast<long>(M)) %
                                           static_cast<long>(M));
    return f;
  };
  long d[4];
  for (std::size_t f = 0; f < table.values.size(); ++f) {
    std::size_t rest = f;
    for (int a = n - 1; a >= 0; --a) {
      d[a] = static_cast<long>(rest % table.width) - static_cast<long>(spec.N - 1);
      rest /= table.width;
    }
    kern[padded_flat(d)] = table.values[f];
  }
  std::size_t idx[4];
  for (std::size_t m = 0; m < data.size(); ++m) {
    spec.unravel(m, idx);
    for (int a = 0; a < n; ++a)
      d[a] = static_cast<long>(idx[a]);
    src[padded_flat(d)] = data[m];
  }
  fft_nd(kern, n, M, -1);
  fft_nd(src, n, M, -1);
  for (std::size_t i = 0; i < padded; ++i)
    src[i] *= kern[i];
  fft_nd(src, n, M, +1);
  GridForm out(spec, 0);
  auto &v = out.components.begin()->second;
  for (std::size_t m = 0; m < v.size(); ++m) {
    spec.unravel(m, idx);
    for (int a = 0; a < n; ++a)
      d[a] = static_cast<long>(idx[a]);
    v[m] = src[padded_flat(d)].real() / static_cast<double>(padded);
  }
  return out;
}

int moment_vanish_order(const GridForm &phi, int mmax) {
  const auto &data = scalar_data(phi, "moment_vanish_order");
  const auto &spec = phi.spec;
  const double hn = std::pow(spec.h(), spec.n);
  double l1 = 0;
  for (double x : data)
    l1 += std::abs(x);
  l1 *= hn;
  if (l1 == 0)
    return mmax + 1;
  std::vector<double> coords(spec.size() * spec.n);
  std::size_t idx[4];
  for (std::size_t m = 0; m < data.size(); ++m) {
    spec.unravel(m, idx);
    for (int a = 0; a < spec.n; ++a)
      coords[m * spec.n + a] = spec.coordinate(idx[a]);
  }
  for (int order = 0; order <= mmax; ++order) {
    const double threshold = 1e-8 * l1 * std::pow(spec.L, order);
    for (const auto &mu : monomials_of_degree(spec.n, order)) {
      double moment = 0;
      for (std::size_t m = 0; m < data.size(); ++m) {
        double w = data[m];
        for (int a = 0; a < spec.n; ++a)
          for (int q = 0; q < mu[a]; ++q)
            w *= coords[m * spec.n + a];
        moment += w;
      }
      if (std::abs(moment * hn) > threshold)
        return order;
    }
  }
  return mmax + 1;
}

} // namespace hodge
