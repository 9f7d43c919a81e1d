#include "hodge/cli.hpp"

#include "hodge/algebra_suite.hpp"
#include "hodge/experiments.hpp"
#include "hodge/fixtures.hpp"
#include "hodge/hform.hpp"
#include "hodge/parallel.hpp"
#include "hodge/poly_text.hpp"
#include "hodge/polyform.hpp"
#include "hodge/spectral.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hodge {

using nlohmann::json;

json JobConfig::to_json() const {
  return {{"command", command},
          {"experiment", experiment},
          {"input", input},
          {"output", output},
          {"alpha_out", alpha_out},
          {"beta_out", beta_out},
          {"report", report},
          {"csv", csv},
          {"action", action},
          {"kind", kind},
          {"inject_fault", inject_fault},
          {"n", n},
          {"k", k},
          {"N", N},
          {"L", L},
          {"p", p},
          {"q", q},
          {"alpha", alpha},
          {"seed", seed},
          {"mu", mu},
          {"nu", nu},
          {"n_max", n_max},
          {"corpus_size", corpus_size},
          {"count", count},
          {"tolerance", tolerance},
          {"fit_tolerance", fit_tolerance},
          {"sigma_cells", sigma_cells},
          {"j_list", j_list},
          {"resolutions", resolutions}};
}

namespace {

template <class T>
void take(const json &j, const char *key, T &out) {
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception &e) {
    throw std::invalid_argument(std::string("config key '") + key + "': " + e.what());
  }
}

}  // namespace

void JobConfig::merge(const json &j) {
  if (!j.is_object())
    throw std::invalid_argument("config must be a JSON object");
  const json known = to_json();
  for (const auto &[key, value] : j.items()) {
    if (!known.contains(key))
      throw std::invalid_argument("unknown config key '" + key + "'");
    const json &ref = known.at(key);
    bool numeric = ref.is_number() && value.is_number();
    bool same = ref.type() == value.type() || numeric || (ref.is_array() && value.is_array());
    if (!same)
      throw std::invalid_argument("config key '" + key + "' has the wrong type");
    if (ref.is_number_integer() && !value.is_number_integer())
      throw std::invalid_argument("config key '" + key + "' must be an integer");
    if (ref.is_number_unsigned() && value.is_number_integer() && value.get<long long>() < 0)
      throw std::invalid_argument("config key '" + key + "' must be non-negative");
  }
  auto has = [&](const char *key) { return j.contains(key); };
#define HODGE_TAKE(field)  \
  if (has(#field))         \
    take(j, #field, field);
  HODGE_TAKE(command)
  HODGE_TAKE(experiment)
  HODGE_TAKE(input)
  HODGE_TAKE(output)
  HODGE_TAKE(alpha_out)
  HODGE_TAKE(beta_out)
  HODGE_TAKE(report)
  HODGE_TAKE(csv)
  HODGE_TAKE(action)
  HODGE_TAKE(kind)
  HODGE_TAKE(inject_fault)
  HODGE_TAKE(n)
  HODGE_TAKE(k)
  HODGE_TAKE(N)
  HODGE_TAKE(L)
  HODGE_TAKE(p)
  HODGE_TAKE(q)
  HODGE_TAKE(alpha)
  HODGE_TAKE(seed)
  HODGE_TAKE(mu)
  HODGE_TAKE(nu)
  HODGE_TAKE(n_max)
  HODGE_TAKE(corpus_size)
  HODGE_TAKE(count)
  HODGE_TAKE(tolerance)
  HODGE_TAKE(fit_tolerance)
  HODGE_TAKE(sigma_cells)
  HODGE_TAKE(j_list)
  HODGE_TAKE(resolutions)
#undef HODGE_TAKE
}

namespace {

// Thrown for anything that should map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw UsageError("cannot write '" + path + "'");
  out << text;
}

// Report JSON goes to cfg.report (or stdout); runtime goes to a sidecar so
// the report itself is reproducible byte for byte.
void emit_report(const JobConfig &cfg, const json &body, double seconds) {
  std::string text = body.dump(2) + "\n";
  if (cfg.report.empty()) {
    std::cout << text;
    return;
  }
  write_text(cfg.report, text);
  json timing = {{"runtime_seconds", seconds}};
  write_text(cfg.report + ".timing.json", timing.dump(2) + "\n");
}

std::string csv_cell(const json &v) {
  if (v.is_string())
    return v.get<std::string>();
  return v.dump();
}

// Every measurement that is an array of flat objects becomes a block of rows
// tagged with the measurement name.
void write_csv(const std::string &path, const ExperimentReport &rep) {
  std::ostringstream out;
  for (const auto &[name, value] : rep.measurements.items()) {
    if (!value.is_array() || value.empty() || !value.front().is_object())
      continue;
    std::vector<std::string> cols;
    for (const auto &[col, cell] : value.front().items())
      if (cell.is_primitive())
        cols.push_back(col);
    out << "table";
    for (const auto &c : cols)
      out << "," << c;
    out << "\n";
    for (const auto &row : value) {
      out << name;
      for (const auto &c : cols)
        out << "," << (row.contains(c) ? csv_cell(row.at(c)) : "");
      out << "\n";
    }
  }
  write_text(path, out.str());
}

json criteria_json(const ExperimentReport &rep) { return rep.to_json(); }

GridSpec grid_of(const JobConfig &cfg) {
  GridSpec spec{cfg.n, cfg.N, cfg.L};
  spec.validate();
  if (cfg.k < 0 || cfg.k > cfg.n)
    throw std::invalid_argument("k must be in [0, n]");
  return spec;
}

double sigma_or(const JobConfig &cfg, double fallback) { return cfg.sigma_cells > 0 ? cfg.sigma_cells : fallback; }

ExperimentReport run_experiment(const JobConfig &cfg) {
  const std::string &name = cfg.experiment;
  if (name == "gaffney") {
    GridSpec spec = grid_of(cfg);
    return gaffney_check(random_bandlimited_form(spec, cfg.k, cfg.seed), cfg.mu);
  }
  if (name == "apriori") {
    GridSpec spec = grid_of(cfg);
    return apriori_check(random_bandlimited_form(spec, cfg.k, cfg.seed), cfg.mu, cfg.nu, cfg.p);
  }
  if (name == "sobolev-scaling") {
    GridSpec spec = grid_of(cfg);
    GridForm theta = gaussian_form(spec, cfg.k, sigma_or(cfg, 8.0) * spec.h(), cfg.seed);
    return sobolev_scaling(theta, cfg.p, cfg.q, cfg.j_list, cfg.fit_tolerance);
  }
  if (name == "sobolev-constant") {
    ProbeConfig pc;
    pc.n = cfg.n;
    pc.k = cfg.k;
    pc.p = cfg.p;
    pc.q = cfg.q;
    pc.resolutions = cfg.resolutions;
    if (cfg.corpus_size > 0)
      pc.corpus_size = cfg.corpus_size;
    pc.sigma_cells = sigma_or(cfg, pc.sigma_cells);
    pc.box = cfg.L;
    pc.seed = cfg.seed;
    return sobolev_constant_probe(pc);
  }
  if (name == "cohomology") {
    CohomologyConfig cc;
    cc.n = cfg.n;
    cc.k = cfg.k;
    cc.p = cfg.p;
    cc.q = cfg.q;
    cc.N = cfg.N;
    cc.box = cfg.L;
    if (cfg.corpus_size > 0)
      cc.corpus_size = cfg.corpus_size;
    cc.resolutions = cfg.resolutions;
    cc.j_list = cfg.j_list;
    cc.sigma_cells = sigma_or(cfg, cc.sigma_cells);
    cc.seed = cfg.seed;
    return cohomology_check(cc);
  }
  if (name == "spectral-identities")
    return spectral_identity_suite(cfg.n, cfg.N, cfg.seed, cfg.tolerance);
  if (name == "hodge-fixtures")
    return hodge_fixture_suite(cfg.n, cfg.N, cfg.count, cfg.seed);
  if (name == "pairing")
    return pairing_suite();
  if (name == "riesz-cross-engine")
    return riesz_cross_engine(CrossEngineConfig{});
  throw UsageError("unknown experiment '" + name + "'");
}

int cmd_experiment(const JobConfig &cfg) {
  auto t0 = std::chrono::steady_clock::now();
  ExperimentReport rep = run_experiment(cfg);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json body = {{"command", "experiment"}, {"config", cfg.to_json()}, {"result", criteria_json(rep)}, {"pass", rep.passed()}};
  emit_report(cfg, body, secs);
  if (!cfg.csv.empty())
    write_csv(cfg.csv, rep);
  if (!cfg.report.empty()) {
    for (const auto &c : rep.criteria)
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " value=" << c.value << "\n";
  }
  return rep.passed() ? kPass : kCheckFailure;
}

int cmd_verify_algebra(const JobConfig &cfg) {
  if (cfg.n_max < 1 || cfg.n_max > 5)
    throw UsageError("--n-max must be in [1, 5]");
  if (!cfg.inject_fault.empty()) {
    auto names = algebra_identity_names();
    if (std::find(names.begin(), names.end(), cfg.inject_fault) == names.end())
      throw UsageError("unknown identity '" + cfg.inject_fault + "'");
  }
  auto t0 = std::chrono::steady_clock::now();
  AlgebraSuiteConfig ac;
  ac.n_max = cfg.n_max;
  if (cfg.corpus_size > 0)
    ac.corpus_size = cfg.corpus_size;
  ac.seed = cfg.seed;
  ac.inject_fault = cfg.inject_fault;
  auto results = run_exterior_suite(ac);
  auto poly = run_polyform_suite(ac);
  results.insert(results.end(), poly.begin(), poly.end());
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  bool ok = true;
  json rows = json::array();
  for (const auto &r : results) {
    ok = ok && r.pass();
    std::cout << (r.pass() ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases << " failures=" << r.failures
              << "\n";
    rows.push_back({{"identity", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"pass", r.pass()}});
  }
  if (!ok)
    for (const auto &r : results)
      if (!r.pass())
        std::cerr << "identity failed: " << r.name << "\n";
  if (!cfg.report.empty())
    emit_report(cfg, {{"command", "verify-algebra"}, {"config", cfg.to_json()}, {"identities", rows}, {"pass", ok}},
                secs);
  return ok ? kPass : kCheckFailure;
}

int cmd_decompose(const JobConfig &cfg) {
  if (cfg.input.empty())
    throw UsageError("--input is required");
  auto t0 = std::chrono::steady_clock::now();
  GridForm theta = read_form(cfg.input);
  HodgeDecomposition hd = hodge_decompose(theta);
  const int n = theta.spec.n;
  if (!cfg.alpha_out.empty() && theta.k >= 1)
    write_form(hd.alpha, cfg.alpha_out);
  if (!cfg.beta_out.empty() && theta.k <= n - 1)
    write_form(hd.beta, cfg.beta_out);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  auto ratio = [&](double v) { return hd.theta_norm > 0 ? v / hd.theta_norm : 0.0; };
  json flags = json::array();
  if (hd.mean_projected)
    flags.push_back("zero modes projected out of input");
  if (hd.zero_input)
    flags.push_back("input is zero after projection");
  if (theta.k == 0)
    flags.push_back("alpha has degree -1 and is not written");
  if (theta.k == n)
    flags.push_back("beta has degree n+1 and is not written");
  bool ok = hd.residual <= cfg.tolerance;
  json result = {{"n", n},
                 {"k", theta.k},
                 {"N", theta.spec.N},
                 {"L", theta.spec.L},
                 {"residual", hd.residual},
                 {"theta_norm", hd.theta_norm},
                 {"alpha_norm", hd.alpha_norm},
                 {"beta_norm", hd.beta_norm},
                 {"alpha_over_theta", ratio(hd.alpha_norm)},
                 {"beta_over_theta", ratio(hd.beta_norm)},
                 {"removed_mean", hd.removed_mean},
                 {"imag_residue", hd.imag_residue},
                 {"flags", flags}};
  emit_report(cfg, {{"command", "decompose"}, {"config", cfg.to_json()}, {"result", result}, {"pass", ok}}, secs);
  return ok ? kPass : kCheckFailure;
}

std::string format_harmonic(const PolyForm &f) {
  std::ostringstream out;
  out << "n=" << f.dim() << "; k=" << f.degree() << "\n";
  for (const auto &[idx, p] : f.components()) {
    std::ostringstream ids;
    ids << "[";
    for (std::size_t i = 0; i < idx.axes().size(); ++i)
      ids << (i ? "," : "") << idx.axes()[i] + 1;
    ids << "]";
    for (const auto &t : harmonic_decompose(p).terms)
      out << "idx=" << ids.str() << "; m=" << t.m << "; nu=" << t.nu << "; weight=" << t.weight.get_str()
          << "; h=" << format_polynomial(t.h) << "\n";
  }
  return out.str();
}

int cmd_poly(const JobConfig &cfg) {
  if (cfg.input.empty())
    throw UsageError("--input is required");
  PolyForm f = parse_polyform(slurp(cfg.input));
  std::string text;
  bool ok = true;
  if (cfg.action == "d") {
    text = format_polyform(poly_d(f));
  } else if (cfg.action == "delta") {
    text = format_polyform(poly_delta(f));
  } else if (cfg.action == "laplacian") {
    text = format_polyform(poly_laplacian(f));
  } else if (cfg.action == "invlap") {
    PolyForm g = poly_inverse_laplacian(f);
    ok = poly_laplacian(g) == f;
    text = format_polyform(g);
  } else if (cfg.action == "harmdecomp") {
    text = format_harmonic(f);
  } else {
    throw UsageError("--action must be one of d, delta, laplacian, invlap, harmdecomp");
  }
  if (cfg.output.empty())
    std::cout << text;
  else
    write_text(cfg.output, text);
  return ok ? kPass : kCheckFailure;
}

int cmd_generate(const JobConfig &cfg) {
  if (cfg.output.empty())
    throw UsageError("--output is required");
  GridSpec spec = grid_of(cfg);
  GridForm f;
  if (cfg.kind == "random")
    f = random_bandlimited_form(spec, cfg.k, cfg.seed);
  else if (cfg.kind == "exact")
    f = exact_fixture(spec, cfg.k, cfg.seed);
  else if (cfg.kind == "coexact")
    f = coexact_fixture(spec, cfg.k, cfg.seed);
  else if (cfg.kind == "gaussian")
    f = gaussian_form(spec, cfg.k, sigma_or(cfg, 8.0) * spec.h(), cfg.seed);
  else
    throw UsageError("--kind must be one of random, exact, coexact, gaussian");
  write_form(f, cfg.output);
  return kPass;
}

// Options bound to a scratch JobConfig; only those actually given on the
// command line are layered over the config file.
class FlagSet {
public:
  template <class T>
  void add(CLI::App *app, const std::string &flag, const std::string &key, T &field, const std::string &help) {
    opts_.push_back({app->add_option(flag, field, help), key});
  }
  json given() const {
    json all = scratch.to_json(), out = json::object();
    for (const auto &[opt, key] : opts_)
      if (opt->count() > 0)
        out[key] = all.at(key);
    return out;
  }
  JobConfig scratch;

private:
  std::vector<std::pair<CLI::Option *, std::string>> opts_;
};

}  // namespace

int run_cli(int argc, char **argv) {
  CLI::App app{"Hodge decomposition toolkit for differential forms on R^n"};
  app.require_subcommand(1);
  FlagSet fs;
  JobConfig &s = fs.scratch;
  std::string config_path;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--config", config_path, "JSON config file (flags override it)");
    fs.add(sub, "--report", "report", s.report, "report JSON path (stdout when omitted)");
    fs.add(sub, "--seed", "seed", s.seed, "random seed");
  };
  auto grid = [&](CLI::App *sub) {
    fs.add(sub, "-n,--dim", "n", s.n, "dimension");
    fs.add(sub, "-k,--degree", "k", s.k, "form degree");
    fs.add(sub, "-N,--resolution", "N", s.N, "grid points per axis");
    fs.add(sub, "-L,--box", "L", s.L, "box side length");
    fs.add(sub, "--sigma-cells", "sigma_cells", s.sigma_cells, "bump width in grid cells");
  };

  CLI::App *va = app.add_subcommand("verify-algebra", "exhaustive sign identities and exact polynomial calculus");
  common(va);
  fs.add(va, "--n-max", "n_max", s.n_max, "largest dimension for exhaustive checks (<= 5)");
  fs.add(va, "--corpus-size", "corpus_size", s.corpus_size, "random polynomial forms");
  fs.add(va, "--inject-fault", "inject_fault", s.inject_fault, "flip the sign of one identity (test mode)");

  CLI::App *dc = app.add_subcommand("decompose", "split an HFORM field into d alpha + delta beta");
  common(dc);
  fs.add(dc, "--input", "input", s.input, "input HFORM manifest");
  fs.add(dc, "--alpha", "alpha_out", s.alpha_out, "output HFORM for alpha");
  fs.add(dc, "--beta", "beta_out", s.beta_out, "output HFORM for beta");
  fs.add(dc, "--tolerance", "tolerance", s.tolerance, "residual bound");

  CLI::App *po = app.add_subcommand("poly", "exact operators on polynomial forms");
  fs.add(po, "--input", "input", s.input, "polynomial-form text file");
  fs.add(po, "--action", "action", s.action, "d | delta | laplacian | invlap | harmdecomp");
  fs.add(po, "--output", "output", s.output, "output file (stdout when omitted)");
  po->add_option("--config", config_path, "JSON config file (flags override it)");

  CLI::App *ex = app.add_subcommand("experiment", "run a named experiment and write a report");
  common(ex);
  grid(ex);
  fs.add(ex, "name", "experiment", s.experiment,
         "gaffney | apriori | sobolev-scaling | sobolev-constant | cohomology | spectral-identities | "
         "hodge-fixtures | pairing | riesz-cross-engine");
  fs.add(ex, "--csv", "csv", s.csv, "CSV path for row tables");
  fs.add(ex, "-p", "p", s.p, "exponent p");
  fs.add(ex, "-q", "q", s.q, "exponent q");
  fs.add(ex, "--alpha", "alpha", s.alpha, "Riesz order");
  fs.add(ex, "--mu", "mu", s.mu, "first axis (0-based)");
  fs.add(ex, "--nu", "nu", s.nu, "second axis (0-based)");
  fs.add(ex, "--tolerance", "tolerance", s.tolerance, "identity tolerance");
  fs.add(ex, "--fit-tolerance", "fit_tolerance", s.fit_tolerance, "exponent-fit tolerance");
  fs.add(ex, "--corpus-size", "corpus_size", s.corpus_size, "corpus size");
  fs.add(ex, "--count", "count", s.count, "fixture count");
  fs.add(ex, "--j-list", "j_list", s.j_list, "dilation exponents");
  fs.add(ex, "--resolutions", "resolutions", s.resolutions, "grid resolutions");

  CLI::App *ge = app.add_subcommand("generate", "write a fixture field as HFORM");
  common(ge);
  grid(ge);
  fs.add(ge, "--kind", "kind", s.kind, "random | exact | coexact | gaussian");
  fs.add(ge, "--output", "output", s.output, "output HFORM manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsageError;
  }

  JobConfig cfg;
  CLI::App *sub = app.get_subcommands().front();
  try {
    thread_count();  // reject a malformed HODGE_THREADS up front
    if (!config_path.empty()) {
      json j;
      try {
        j = json::parse(slurp(config_path));
      } catch (const json::parse_error &e) {
        throw UsageError(std::string("config: ") + e.what());
      }
      cfg.merge(j);
    }
    cfg.merge(fs.given());
    cfg.command = sub->get_name();
    if (cfg.command == "verify-algebra")
      return cmd_verify_algebra(cfg);
    if (cfg.command == "decompose")
      return cmd_decompose(cfg);
    if (cfg.command == "poly")
      return cmd_poly(cfg);
    if (cfg.command == "experiment")
      return cmd_experiment(cfg);
    if (cfg.command == "generate")
      return cmd_generate(cfg);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const FormatError &e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument &e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error &e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
  return kUsageError;
}

}  // namespace hodge
