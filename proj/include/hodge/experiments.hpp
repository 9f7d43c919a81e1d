#pragma once

#include "hodge/grid.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hodge {

// One judged quantity: pass iff |value - target| <= tolerance (kind
// "abs_diff") or value <= tolerance (kind "upper_bound").
struct Criterion {
  std::string name;
  double value = 0;
  double target = 0;
  double tolerance = 0;
  std::string kind = "upper_bound";
  bool pass = false;
};

struct ExperimentReport {
  std::string name;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json measurements = nlohmann::json::object();
  std::vector<Criterion> criteria;
  std::vector<std::string> flags;
  double runtime_seconds = 0;  // kept out of to_json()

  void upper_bound(const std::string &name, double value, double tolerance);
  void within(const std::string &name, double value, double target, double tolerance);
  bool passed() const;
  // Deterministic content only (no runtime).
  nlohmann::json to_json() const;
};

// Least-squares slope of log(y) against log(x).
double fit_loglog_slope(const std::vector<double> &x, const std::vector<double> &y);

// d_mu = -(R_mu R delta + R_mu R* d) residual, and the ratios
// |d_mu theta|_p / (|d theta|_p + |delta theta|_p) for p in {1.5, 2, 3}.
ExperimentReport gaffney_check(const GridForm &theta, int mu);

// d_mu d_nu = R_mu R_nu Lap residual and |d_mu d_nu theta|_p / |Lap theta|_p
// at p and at 2.
ExperimentReport apriori_check(const GridForm &theta, int mu, int nu, double p);

// Q(t) = |h_t theta|_q / (|d h_t theta|_p + |delta h_t theta|_p) for
// t = 2^j, j in j_list, and the fitted exponent against n/p - n/q - 1.
ExperimentReport sobolev_scaling(const GridForm &theta, double p, double q,
                                 const std::vector<int> &j_list, double tolerance = 0.05);

struct ProbeConfig {
  int n = 2;
  int k = 1;
  double p = 1.5;
  double q = 6.0;
  std::vector<std::size_t> resolutions{32, 64, 128};
  int corpus_size = 4;
  double sigma_cells = 3.0;  // bump width in grid cells
  double box = 1.0;
  std::uint64_t seed = 1;
};

// max over a bump corpus of |theta|_q / (|d theta|_p + |delta theta|_p) at
// each resolution, with the bump width fixed in cells. Passes when the
// ratio is stable within 10% for 1/p - 1/q = 1/n and drifts monotonically
// otherwise.
ExperimentReport sobolev_constant_probe(const ProbeConfig &cfg);

struct CohomologyConfig {
  int n = 2;
  int k = 1;
  double p = 2.0;
  double q = 2.0;
  std::size_t N = 64;
  double box = 1.0;
  int corpus_size = 4;
  std::vector<std::size_t> resolutions{32, 64, 128};
  std::vector<int> j_list{0, 1, 2};
  double sigma_cells = 8.0;
  std::uint64_t seed = 1;
};

// Positive branch: closed theta = E(random) satisfies theta = d(U theta);
// records |U theta|_q / |theta|_p per resolution. Negative branch: slope
// gamma of log(|d h_t phi|_p / |h_t phi - E h_t phi|_q) against log t,
// compared with 1 + n/q - n/p.
ExperimentReport cohomology_check(const CohomologyConfig &cfg);

// Multiplier, projector and pairing identities on random mean-zero
// band-limited forms of every degree.
ExperimentReport spectral_identity_suite(int n, std::size_t N, std::uint64_t seed, double tolerance = 1e-10);

// Hodge decomposition on random, exact and coexact fixtures.
ExperimentReport hodge_fixture_suite(int n, std::size_t N, int count, std::uint64_t seed);

// Gaussian pairing over the listed (n, alpha) x s grid plus gamma constants.
ExperimentReport pairing_suite();

struct CrossEngineConfig {
  std::size_t N_potential = 128;
  std::vector<double> alphas{0.5, 1.0, 1.5};
  std::size_t N_transform = 256;
  double delta_cells = 2.0;
  double potential_tolerance = 1e-2;
  double transform_tolerance = 5e-2;
};

// Direct quadrature vs spectral I^alpha, and truncated singular integral
// vs spectral R_j, in n = 2.
ExperimentReport riesz_cross_engine(const CrossEngineConfig &cfg);

} // namespace hodge
