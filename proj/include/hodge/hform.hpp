#pragma once

#include "hodge/grid.hpp"

#include <filesystem>
#include <stdexcept>

namespace hodge {

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Manifest (JSON):
//   {"version":1, "n":2, "k":1, "shape":[64,64], "box":6.28,
//    "layout":"row-major-axis0-slowest",
//    "components":[{"axes":[0], "data":"theta.0.bin"}, ...]}
// Each data file holds N^n little-endian float64 values; paths are relative
// to the manifest's directory. Axes are 0-based.
GridForm read_form(const std::filesystem::path &manifest);

// Writes the manifest and one `<stem>.<axes>.bin` file per component next
// to it (`<stem>.scalar.bin` for degree 0).
void write_form(const GridForm &f, const std::filesystem::path &manifest);

} // namespace hodge
