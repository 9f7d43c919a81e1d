#include "hodge/cli.hpp"
#include "hodge/hform.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <cstring>
#include <limits>
#include <sstream>

using namespace hodge;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "hodge");
  std::vector<char *> argv;
  for (auto &a : args)
    argv.push_back(a.data());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

fs::path scratch(const std::string &name) {
  fs::path d = fs::temp_directory_path() / ("hodge_cli_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void put(const fs::path &p, const std::string &text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string s(const fs::path &p) { return p.string(); }

}  // namespace

TEST_CASE("job config rejects unknown keys and bad types") {
  JobConfig c;
  CHECK_THROWS_AS(c.merge(json{{"bogus", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(c.merge(json{{"n", "two"}}), std::invalid_argument);
  CHECK_THROWS_AS(c.merge(json{{"n", 2.5}}), std::invalid_argument);
  CHECK_THROWS_AS(c.merge(json{{"N", -4}}), std::invalid_argument);
  CHECK_THROWS_AS(c.merge(json::array()), std::invalid_argument);
  c.merge(json{{"n", 3}, {"p", 4}, {"j_list", {0, 1}}});
  CHECK(c.n == 3);
  CHECK(c.p == 4.0);
  CHECK(c.j_list == std::vector<int>{0, 1});
  JobConfig round;
  round.merge(c.to_json());
  CHECK(round.to_json() == c.to_json());
}

TEST_CASE("verify-algebra") {
  fs::path d = scratch("algebra");
  CHECK(run({"verify-algebra", "--corpus-size", "20", "--report", s(d / "r.json")}) == kPass);
  json r = json::parse(slurp(d / "r.json"));
  CHECK(r["pass"] == true);
  CHECK(r["config"]["n_max"] == 5);
  CHECK(run({"verify-algebra", "--corpus-size", "20", "--inject-fault", "interior_star"}) == kCheckFailure);
  CHECK(run({"verify-algebra", "--inject-fault", "nonsense"}) == kUsageError);
  CHECK(run({"verify-algebra", "--n-max", "6"}) == kUsageError);
  CHECK(run({"verify-algebra", "--n-max", "three"}) == kUsageError);
  CHECK(run({}) == kUsageError);
  CHECK(run({"frobnicate"}) == kUsageError);
}

TEST_CASE("generate and decompose") {
  fs::path d = scratch("decompose");
  CHECK(run({"generate", "--kind", "exact", "-n", "2", "-k", "1", "-N", "32", "--output", s(d / "ex.hform")}) ==
        kPass);
  CHECK(run({"decompose", "--input", s(d / "ex.hform"), "--alpha", s(d / "a.hform"), "--beta", s(d / "b.hform"),
             "--report", s(d / "r.json")}) == kPass);
  json r = json::parse(slurp(d / "r.json"));
  CHECK(r["result"]["beta_over_theta"].get<double>() <= 1e-10);
  CHECK(r["result"]["residual"].get<double>() <= 1e-10);
  CHECK(fs::exists(d / "r.json.timing.json"));
  GridForm alpha = read_form(d / "a.hform");
  CHECK(alpha.k == 0);
  CHECK(read_form(d / "b.hform").k == 2);

  CHECK(run({"generate", "--kind", "random", "-n", "3", "-k", "2", "-N", "16", "--output", s(d / "rn.hform")}) ==
        kPass);
  CHECK(run({"decompose", "--input", s(d / "rn.hform"), "--report", s(d / "r2.json")}) == kPass);
  CHECK(json::parse(slurp(d / "r2.json"))["result"]["residual"].get<double>() <= 1e-10);

  CHECK(run({"generate", "--kind", "coexact", "-n", "2", "-k", "2", "-N", "16", "--output", s(d / "c.hform")}) ==
        kUsageError);
  CHECK(run({"generate", "--kind", "wavy", "--output", s(d / "w.hform")}) == kUsageError);
  CHECK(run({"generate", "--kind", "random", "-N", "24", "--output", s(d / "w.hform")}) == kUsageError);

  // Corrupt manifest and NaN data.
  std::string manifest = slurp(d / "ex.hform");
  put(d / "bad.hform", manifest.substr(0, manifest.size() / 2));
  CHECK(run({"decompose", "--input", s(d / "bad.hform")}) == kUsageError);
  CHECK(run({"decompose", "--input", s(d / "missing.hform")}) == kUsageError);
  std::string raw = slurp(d / "ex.0.bin");
  std::string nan_bytes(8, '\0');
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::memcpy(nan_bytes.data(), &nan, 8);
  raw.replace(0, 8, nan_bytes);
  put(d / "ex.0.bin", raw);
  CHECK(run({"decompose", "--input", s(d / "ex.hform")}) == kUsageError);
}

TEST_CASE("poly subcommand") {
  fs::path d = scratch("poly");
  put(d / "f.txt", "n=2; k=0\nidx=[]; poly=x1^2\n");
  CHECK(run({"poly", "--input", s(d / "f.txt"), "--action", "harmdecomp", "--output", s(d / "h.txt")}) == kPass);
  CHECK(slurp(d / "h.txt") ==
        "n=2; k=0\nidx=[]; m=0; nu=2; weight=1/2; h=x1^2 - x2^2\nidx=[]; m=1; nu=0; weight=1/2; h=1\n");
  CHECK(run({"poly", "--input", s(d / "f.txt"), "--action", "d", "--output", s(d / "d.txt")}) == kPass);
  CHECK(slurp(d / "d.txt") == "n=2; k=1\nidx=[1]; poly=2*x1\n");
  CHECK(run({"poly", "--input", s(d / "f.txt"), "--action", "laplacian", "--output", s(d / "l.txt")}) == kPass);
  CHECK(slurp(d / "l.txt") == "n=2; k=0\nidx=[]; poly=-2\n");

  put(d / "one.txt", "n=2; k=0\nidx=[]; poly=1\n");
  CHECK(run({"poly", "--input", s(d / "one.txt"), "--action", "invlap", "--output", s(d / "i.txt")}) == kPass);
  CHECK(slurp(d / "i.txt") == "n=2; k=0\nidx=[]; poly=-1/4*x1^2 - 1/4*x2^2\n");

  put(d / "x.txt", "n=2; k=1\nidx=[1]; poly=x1\n");
  CHECK(run({"poly", "--input", s(d / "x.txt"), "--action", "delta", "--output", s(d / "x.out")}) == kPass);
  CHECK(slurp(d / "x.out") == "n=2; k=0\nidx=[]; poly=-1\n");

  put(d / "bad.txt", "n=2; k=0\nidx=[]; poly=x9\n");
  CHECK(run({"poly", "--input", s(d / "bad.txt"), "--action", "d"}) == kUsageError);
  CHECK(run({"poly", "--input", s(d / "f.txt"), "--action", "curl"}) == kUsageError);
}

TEST_CASE("experiment reports, config precedence and CSV") {
  fs::path d = scratch("experiment");
  put(d / "cfg.json", R"({"n": 2, "k": 0, "N": 128, "p": 2.0, "q": 4.0, "seed": 9})");
  CHECK(run({"experiment", "sobolev-scaling", "--config", s(d / "cfg.json"), "--report", s(d / "a.json"), "--csv",
             s(d / "a.csv")}) == kPass);
  json a = json::parse(slurp(d / "a.json"));
  CHECK(a["config"]["N"] == 128);
  CHECK(a["config"]["seed"] == 9);
  CHECK(a["config"]["fit_tolerance"] == 0.05);
  CHECK(a["result"]["measurements"]["expected_exponent"] == -0.5);
  std::string csv = slurp(d / "a.csv");
  CHECK(csv.rfind("table,", 0) == 0);
  CHECK(csv.find("Q,") != std::string::npos);

  // Flags beat the config file.
  CHECK(run({"experiment", "sobolev-scaling", "--config", s(d / "cfg.json"), "-q", "2", "--report",
             s(d / "b.json")}) == kPass);
  json b = json::parse(slurp(d / "b.json"));
  CHECK(b["config"]["q"] == 2.0);
  CHECK(b["config"]["N"] == 128);

  // Identical inputs give identical bytes; timing lives in the sidecar.
  CHECK(run({"experiment", "sobolev-scaling", "--config", s(d / "cfg.json"), "--report", s(d / "a.json")}) == kPass);
  std::string first = slurp(d / "a.json");
  CHECK(run({"experiment", "sobolev-scaling", "--config", s(d / "cfg.json"), "--report", s(d / "a.json")}) == kPass);
  CHECK(slurp(d / "a.json") == first);
  CHECK(first.find("runtime") == std::string::npos);
  CHECK(json::parse(slurp(d / "a.json.timing.json")).contains("runtime_seconds"));

  put(d / "junk.json", R"({"n": 2, "colour": "blue"})");
  CHECK(run({"experiment", "gaffney", "--config", s(d / "junk.json")}) == kUsageError);
  put(d / "broken.json", "{");
  CHECK(run({"experiment", "gaffney", "--config", s(d / "broken.json")}) == kUsageError);
  CHECK(run({"experiment", "nonsense"}) == kUsageError);
  CHECK(run({"experiment", "gaffney", "-k", "5", "--report", s(d / "g.json")}) == kUsageError);

  CHECK(run({"experiment", "gaffney", "-n", "3", "-k", "1", "-N", "16", "--report", s(d / "g.json")}) == kPass);
  CHECK(run({"experiment", "apriori", "-n", "2", "-N", "32", "-p", "3", "--report", s(d / "ap.json")}) == kPass);
  CHECK(run({"experiment", "pairing", "--report", s(d / "pa.json")}) == kPass);
  CHECK(run({"experiment", "hodge-fixtures", "-N", "16", "--count", "6", "--report", s(d / "hf.json")}) == kPass);
  CHECK(run({"experiment", "cohomology", "-N", "128", "--report", s(d / "co.json")}) == kPass);
  CHECK(run({"experiment", "sobolev-constant", "-p", "1.5", "-q", "6", "--report", s(d / "sc.json")}) == kPass);
  CHECK(run({"experiment", "spectral-identities", "-n", "2", "-N", "16", "--report", s(d / "si.json")}) == kPass);

  // A scaling fit judged far too strictly fails as a check, not as usage.
  CHECK(run({"experiment", "sobolev-scaling", "-n", "2", "-N", "32", "--fit-tolerance", "1e-9", "--report",
             s(d / "f.json")}) == kCheckFailure);
}
