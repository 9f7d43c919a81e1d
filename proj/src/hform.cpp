#include "hodge/hform.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

namespace hodge {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char *kLayout = "row-major-axis0-slowest";

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);

void to_little_endian(std::vector<unsigned char> &bytes) {
  if constexpr (std::endian::native == std::endian::big)
    for (std::size_t i = 0; i < bytes.size(); i += 8)
      std::reverse(bytes.begin() + i, bytes.begin() + i + 8);
}

std::string data_name(const fs::path &manifest, const FormIndex &idx) {
  std::string name = manifest.stem().string();
  if (idx.degree() == 0)
    return name + ".scalar.bin";
  for (int a : idx.axes())
    name += "." + std::to_string(a);
  return name + ".bin";
}

template <class T>
T get_field(const json &j, const char *key) {
  if (!j.contains(key))
    throw FormatError(std::string("manifest: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception &) {
    throw FormatError(std::string("manifest: field '") + key + "' has the wrong type");
  }
}

std::vector<double> read_data(const fs::path &path, std::size_t count) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw FormatError("cannot open data file " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() != count * 8)
    throw FormatError("data file " + path.string() + " has " + std::to_string(bytes.size()) +
                      " bytes, expected " + std::to_string(count * 8));
  to_little_endian(bytes);
  std::vector<double> v(count);
  std::memcpy(v.data(), bytes.data(), bytes.size());
  for (double x : v)
    if (!std::isfinite(x))
      throw FormatError("data file " + path.string() + " contains non-finite values");
  return v;
}

} // namespace

GridForm read_form(const fs::path &manifest) {
  std::ifstream in(manifest);
  if (!in)
    throw FormatError("cannot open manifest " + manifest.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception &e) {
    throw FormatError("manifest is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_object())
    throw FormatError("manifest must be a JSON object");
  if (get_field<int>(j, "version") != 1)
    throw FormatError("manifest: unsupported version");
  if (get_field<std::string>(j, "layout") != kLayout)
    throw FormatError("manifest: unsupported layout");
  GridSpec spec;
  spec.n = get_field<int>(j, "n");
  const int k = get_field<int>(j, "k");
  auto shape = get_field<std::vector<long>>(j, "shape");
  spec.L = get_field<double>(j, "box");
  if (spec.n < 1 || spec.n > 4)
    throw FormatError("manifest: n must be in [1, 4]");
  if (k < 0 || k > spec.n)
    throw FormatError("manifest: k must be in [0, n]");
  if (static_cast<int>(shape.size()) != spec.n)
    throw FormatError("manifest: shape length differs from n");
  for (long s : shape)
    if (s != shape[0])
      throw FormatError("manifest: shape must be uniform across axes");
  if (shape[0] < 2 || !is_power_of_two(static_cast<std::size_t>(shape[0])))
    throw FormatError("manifest: N must be a power of two >= 2");
  spec.N = static_cast<std::size_t>(shape[0]);
  if (!(spec.L > 0) || !std::isfinite(spec.L))
    throw FormatError("manifest: box must be positive");

  GridForm f(spec, k);
  auto comps = get_field<json>(j, "components");
  if (!comps.is_array())
    throw FormatError("manifest: components must be an array");
  std::map<FormIndex, bool> seen;
  for (const auto &c : comps) {
    if (!c.is_object())
      throw FormatError("manifest: component entries must be objects");
    auto axes = get_field<std::vector<int>>(c, "axes");
    FormIndex idx;
    try {
      idx = FormIndex(spec.n, axes);
    } catch (const std::invalid_argument &e) {
      throw FormatError(std::string("manifest: bad component axes: ") + e.what());
    }
    if (idx.degree() != k)
      throw FormatError("manifest: component degree differs from k");
    if (seen[idx])
      throw FormatError("manifest: duplicate component " + idx.to_string());
    seen[idx] = true;
    fs::path data = get_field<std::string>(c, "data");
    if (data.is_absolute())
      throw FormatError("manifest: data paths must be relative");
    f[idx] = read_data(manifest.parent_path() / data, spec.size());
  }
  return f;
}

void write_form(const GridForm &f, const fs::path &manifest) {
  f.spec.validate();
  if (f.k < 0 || f.k > f.spec.n)
    throw std::invalid_argument("write_form: degree out of range");
  json j;
  j["version"] = 1;
  j["n"] = f.spec.n;
  j["k"] = f.k;
  j["shape"] = std::vector<std::size_t>(f.spec.n, f.spec.N);
  j["box"] = f.spec.L;
  j["layout"] = kLayout;
  j["components"] = json::array();
  for (const auto &[idx, v] : f.components) {
    std::string name = data_name(manifest, idx);
    std::vector<unsigned char> bytes(v.size() * 8);
    std::memcpy(bytes.data(), v.data(), bytes.size());
    to_little_endian(bytes);
    fs::path path = manifest.parent_path() / name;
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out)
      throw std::runtime_error("write_form: cannot write " + path.string());
    j["components"].push_back({{"axes", idx.axes()}, {"data", name}});
  }
  std::ofstream out(manifest);
  out << j.dump(2) << "\n";
  if (!out)
    throw std::runtime_error("write_form: cannot write " + manifest.string());
}

} // namespace hodge
