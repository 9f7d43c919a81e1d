#include "hodge/spectral.hpp"

#include "hodge/parallel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hodge {

MultiplierSpec MultiplierSpec::riesz_potential(double alpha) {
  if (!std::isfinite(alpha))
    throw std::invalid_argument("riesz_potential: alpha must be finite");
  MultiplierSpec m;
  m.kind = Kind::RieszPotential;
  m.alpha = alpha;
  return m;
}

MultiplierSpec MultiplierSpec::riesz_direction(int axis) {
  if (axis < 0)
    throw std::invalid_argument("riesz_direction: negative axis");
  MultiplierSpec m;
  m.kind = Kind::RieszDirection;
  m.axis = axis;
  return m;
}

MultiplierSpec MultiplierSpec::poly_symbol(Polynomial p) {
  MultiplierSpec m;
  m.kind = Kind::Poly;
  m.poly = std::move(p);
  return m;
}

bool MultiplierSpec::zeroes_zero_mode() const {
  switch (kind) {
  case Kind::RieszPotential:
    return alpha != 0.0;
  case Kind::RieszDirection:
    return true;
  default:
    return false;
  }
}

Complex MultiplierSpec::symbol(const double *xi, int n) const {
  switch (kind) {
  case Kind::Identity:
    return 1.0;
  case Kind::RieszPotential: {
    if (alpha == 0.0)
      return 1.0;
    double r2 = 0;
    for (int a = 0; a < n; ++a)
      r2 += xi[a] * xi[a];
    return std::pow(r2, -0.5 * alpha);
  }
  case Kind::RieszDirection: {
    double r2 = 0;
    for (int a = 0; a < n; ++a)
      r2 += xi[a] * xi[a];
    return Complex(0.0, xi[axis] / std::sqrt(r2));
  }
  case Kind::Laplacian: {
    double r2 = 0;
    for (int a = 0; a < n; ++a)
      r2 += xi[a] * xi[a];
    return r2;
  }
  case Kind::Poly: {
    // d_a -> -i xi_a
    Complex sum = 0;
    for (const auto &[e, c] : poly.terms()) {
      Complex t = c.get_d();
      for (int a = 0; a < n; ++a)
        for (int q = 0; q < e[a]; ++q)
          t *= Complex(0.0, -xi[a]);
      sum += t;
    }
    return sum;
  }
  }
  return 0.0;
}

std::string MultiplierSpec::describe() const {
  std::ostringstream os;
  switch (kind) {
  case Kind::Identity:
    os << "Identity";
    break;
  case Kind::RieszPotential:
    os << "RieszPotential(" << alpha << ")";
    break;
  case Kind::RieszDirection:
    os << "RieszDirection(" << axis << ")";
    break;
  case Kind::Laplacian:
    os << "Laplacian";
    break;
  case Kind::Poly:
    os << "PolySymbol";
    break;
  }
  return os.str();
}

namespace {

// Calls fn(flat, xi, zero) for every mode, xi the effective wavevector.
template <class F>
void for_each_mode(const GridSpec &spec, F &&fn) {
  std::vector<double> k1(spec.N);
  for (std::size_t j = 0; j < spec.N; ++j)
    k1[j] = spec.effective_wavenumber(j);
  std::size_t idx[4];
  double xi[4];
  for (std::size_t f = 0; f < spec.size(); ++f) {
    spec.unravel(f, idx);
    bool zero = true;
    for (int a = 0; a < spec.n; ++a) {
      xi[a] = k1[idx[a]];
      if (xi[a] != 0.0)
        zero = false;
    }
    fn(f, xi, zero);
  }
}

std::vector<Complex> symbol_table(const GridSpec &spec, const MultiplierSpec &m) {
  if (m.kind == MultiplierSpec::Kind::RieszDirection && m.axis >= spec.n)
    throw std::invalid_argument("RieszDirection axis out of range");
  if (m.kind == MultiplierSpec::Kind::Poly && m.poly.dim() != spec.n)
    throw std::invalid_argument("PolySymbol dimension mismatch");
  std::vector<Complex> table(spec.size());
  if (m.kind == MultiplierSpec::Kind::Poly) {
    // Same map as MultiplierSpec::symbol with the coefficients converted once.
    std::vector<std::pair<Exponent, double>> terms;
    for (const auto &[e, c] : m.poly.terms())
      terms.emplace_back(e, c.get_d());
    for_each_mode(spec, [&](std::size_t f, const double *xi, bool) {
      Complex sum = 0;
      for (const auto &[e, c] : terms) {
        Complex t = c;
        for (int a = 0; a < spec.n; ++a)
          for (int q = 0; q < e[a]; ++q)
            t *= Complex(0.0, -xi[a]);
        sum += t;
      }
      table[f] = sum;
    });
    return table;
  }
  const bool kill = m.zeroes_zero_mode();
  for_each_mode(spec, [&](std::size_t f, const double *xi, bool zero) {
    table[f] = (zero && kill) ? Complex(0.0) : m.symbol(xi, spec.n);
  });
  return table;
}

SpectralForm multiply(const SpectralForm &F, const std::vector<Complex> &table) {
  SpectralForm out = F;
  std::vector<std::vector<Complex> *> slots;
  for (auto &[idx, v] : out.components)
    slots.push_back(&v);
  parallel_for(slots.size(), [&](std::size_t c) {
    auto &v = *slots[c];
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] *= table[i];
  });
  return out;
}

template <class Map>
SpectralForm signed_map(const SpectralForm &F, int new_k, Map &&map) {
  SpectralForm out(F.spec, new_k);
  for (const auto &[idx, v] : F.components) {
    SignedIndex s = map(idx);
    if (s.is_zero())
      continue;
    auto &dst = out.components.at(*s.index);
    for (std::size_t i = 0; i < v.size(); ++i)
      dst[i] += static_cast<double>(s.sign) * v[i];
  }
  return out;
}

void check_axis(int mu, const GridSpec &spec) {
  if (mu < 0 || mu >= spec.n)
    throw std::invalid_argument("axis out of range");
}

} // namespace

SpectralForm apply_scalar_multiplier(const SpectralForm &F, const MultiplierSpec &m) {
  return multiply(F, symbol_table(F.spec, m));
}

double remove_zero_modes(SpectralForm &F) {
  double removed = 0;
  for_each_mode(F.spec, [&](std::size_t f, const double *, bool zero) {
    if (!zero)
      return;
    for (auto &[idx, v] : F.components) {
      removed += std::norm(v[f]);
      v[f] = 0.0;
    }
  });
  return std::sqrt(removed / std::pow(F.spec.L, F.spec.n));
}

SpectralForm spectral_partial(int mu, const SpectralForm &F) {
  check_axis(mu, F.spec);
  // Symbol -i xi_mu depends on one index only.
  const auto &spec = F.spec;
  std::vector<Complex> factor(spec.N);
  for (std::size_t j = 0; j < spec.N; ++j)
    factor[j] = Complex(0.0, -spec.effective_wavenumber(j));
  std::size_t stride = 1;
  for (int a = spec.n - 1; a > mu; --a)
    stride *= spec.N;
  SpectralForm out = F;
  for (auto &[idx, v] : out.components)
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] *= factor[(i / stride) % spec.N];
  return out;
}

SpectralForm spectral_epsilon(int mu, const SpectralForm &F) {
  check_axis(mu, F.spec);
  return signed_map(F, F.k + 1, [&](const FormIndex &a) { return exterior_basis(mu, a); });
}

SpectralForm spectral_iota(int mu, const SpectralForm &F) {
  check_axis(mu, F.spec);
  return signed_map(F, F.k - 1, [&](const FormIndex &a) { return interior_basis(mu, a); });
}

SpectralForm spectral_star(const SpectralForm &F) {
  return signed_map(F, F.spec.n - F.k, [](const FormIndex &a) { return hodge_star_basis(a); });
}

SpectralForm spectral_d(const SpectralForm &F) {
  SpectralForm out(F.spec, F.k + 1);
  for (int mu = 0; mu < F.spec.n; ++mu)
    out += spectral_epsilon(mu, spectral_partial(mu, F));
  return out;
}

SpectralForm spectral_delta(const SpectralForm &F) {
  SpectralForm out(F.spec, F.k - 1);
  for (int mu = 0; mu < F.spec.n; ++mu)
    out -= spectral_iota(mu, spectral_partial(mu, F));
  return out;
}

SpectralForm spectral_laplacian(const SpectralForm &F) {
  return apply_scalar_multiplier(F, MultiplierSpec::laplacian());
}

SpectralForm riesz_potential(double alpha, const SpectralForm &F) {
  return apply_scalar_multiplier(F, MultiplierSpec::riesz_potential(alpha));
}

SpectralForm riesz_direction(int axis, const SpectralForm &F) {
  return apply_scalar_multiplier(F, MultiplierSpec::riesz_direction(axis));
}

SpectralForm riesz_R(const SpectralForm &F) { return spectral_d(riesz_potential(1.0, F)); }
SpectralForm riesz_Rstar(const SpectralForm &F) { return spectral_delta(riesz_potential(1.0, F)); }
SpectralForm projector_E(const SpectralForm &F) { return riesz_R(riesz_Rstar(F)); }
SpectralForm projector_Estar(const SpectralForm &F) { return riesz_Rstar(riesz_R(F)); }
SpectralForm potential_U(const SpectralForm &F) { return riesz_potential(2.0, spectral_delta(F)); }
SpectralForm potential_Ustar(const SpectralForm &F) { return riesz_potential(2.0, spectral_d(F)); }

HodgeDecomposition hodge_decompose(const GridForm &theta) {
  HodgeDecomposition res;
  SpectralForm T = fft_form(theta);
  const double total = spectral_l2_norm(T);
  res.removed_mean = remove_zero_modes(T);
  res.mean_projected = res.removed_mean > 1e-13 * std::max(total, 1e-300);
  res.theta_norm = spectral_l2_norm(T);

  double im_a = 0, im_b = 0;
  SpectralForm A = potential_U(T);
  SpectralForm B = potential_Ustar(T);
  res.alpha = ifft_form(A, &im_a);
  res.beta = ifft_form(B, &im_b);
  res.alpha_norm = lp_norm(res.alpha, 2.0);
  res.beta_norm = lp_norm(res.beta, 2.0);
  // Relative to the larger potential: a vanishing potential has pure-noise ratio.
  const double ma = max_abs(res.alpha), mb = max_abs(res.beta), scale = std::max(ma, mb);
  res.imag_residue = scale > 0 ? std::max(im_a * ma, im_b * mb) / scale : 0.0;

  if (res.theta_norm == 0.0) {
    res.zero_input = true;
    res.residual = 0.0;
    return res;
  }
  // Rebuild from the real-space outputs so the residual covers the round trip.
  GridForm recon = ifft_form(spectral_d(fft_form(res.alpha)) + spectral_delta(fft_form(res.beta)));
  GridForm target = ifft_form(T);
  res.residual = lp_norm(target - recon, 2.0) / lp_norm(target, 2.0);
  return res;
}

} // namespace hodge
