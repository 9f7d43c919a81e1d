#include "hodge/fixtures.hpp"
#include "hodge/hform.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

using namespace hodge;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path scratch_dir(const std::string &name) {
  fs::path d = fs::temp_directory_path() / ("hodge_hform_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

json load(const fs::path &p) {
  std::ifstream in(p);
  return json::parse(in);
}

void save(const fs::path &p, const json &j) {
  std::ofstream out(p);
  out << j.dump(2);
}

}  // namespace

TEST_CASE("write and read back bit for bit") {
  fs::path d = scratch_dir("roundtrip");
  for (int k = 0; k <= 3; ++k) {
    GridForm f = random_bandlimited_form(GridSpec{3, 8, 2.5}, k, 40 + k);
    fs::path m = d / ("f" + std::to_string(k) + ".hform");
    write_form(f, m);
    GridForm g = read_form(m);
    CHECK(g.spec == f.spec);
    CHECK(g.k == f.k);
    for (const auto &[idx, v] : f.components)
      CHECK(g[idx] == v);
  }
  CHECK(fs::exists(d / "f0.scalar.bin"));
  CHECK(fs::exists(d / "f2.0.2.bin"));
  json j = load(d / "f1.hform");
  CHECK(j["version"] == 1);
  CHECK(j["layout"] == "row-major-axis0-slowest");
  CHECK(j["shape"] == json::array({8, 8, 8}));
  CHECK(fs::file_size(d / "f1.0.bin") == 8 * 8 * 8 * sizeof(double));
}

TEST_CASE("malformed manifests are rejected") {
  fs::path d = scratch_dir("bad");
  GridForm f = random_bandlimited_form(GridSpec{2, 8, 1.0}, 1, 3);
  write_form(f, d / "ok.hform");
  const json good = load(d / "ok.hform");

  auto rejects = [&](const std::function<void(json &)> &edit) {
    json j = good;
    edit(j);
    save(d / "bad.hform", j);
    CHECK_THROWS_AS(read_form(d / "bad.hform"), FormatError);
  };
  rejects([](json &j) { j["version"] = 2; });
  rejects([](json &j) { j["layout"] = "column-major"; });
  rejects([](json &j) { j.erase("n"); });
  rejects([](json &j) { j["n"] = "two"; });
  rejects([](json &j) { j["k"] = 3; });
  rejects([](json &j) { j["shape"] = json::array({8, 16}); });
  rejects([](json &j) { j["shape"] = json::array({6, 6}); });
  rejects([](json &j) { j["shape"] = json::array({8}); });
  rejects([](json &j) { j["box"] = 0.0; });
  rejects([](json &j) { j["components"][0]["axes"] = json::array({0, 1}); });
  rejects([](json &j) { j["components"][0]["axes"] = json::array({5}); });
  rejects([](json &j) { j["components"][1]["axes"] = json::array({0}); });
  rejects([&](json &j) { j["components"][0]["data"] = (d / "ok.0.bin").string(); });
  rejects([](json &j) { j["components"][0]["data"] = "missing.bin"; });

  CHECK_THROWS_AS(read_form(d / "nope.hform"), FormatError);
  {
    std::ofstream out(d / "garbage.hform");
    out << "{not json";
  }
  CHECK_THROWS_AS(read_form(d / "garbage.hform"), FormatError);
}

TEST_CASE("data files are checked for size and finiteness") {
  fs::path d = scratch_dir("data");
  GridForm f = random_bandlimited_form(GridSpec{2, 8, 1.0}, 0, 3);
  write_form(f, d / "s.hform");
  {
    std::ofstream out(d / "s.scalar.bin", std::ios::binary | std::ios::trunc);
    std::vector<double> v(63, 0.0);
    out.write(reinterpret_cast<const char *>(v.data()), v.size() * sizeof(double));
  }
  CHECK_THROWS_AS(read_form(d / "s.hform"), FormatError);
  {
    std::ofstream out(d / "s.scalar.bin", std::ios::binary | std::ios::trunc);
    std::vector<double> v(64, 0.0);
    v[10] = std::numeric_limits<double>::quiet_NaN();
    out.write(reinterpret_cast<const char *>(v.data()), v.size() * sizeof(double));
  }
  CHECK_THROWS_AS(read_form(d / "s.hform"), FormatError);
}
