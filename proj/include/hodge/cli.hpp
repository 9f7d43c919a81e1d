#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hodge {

// Every knob a job can take. Config-file keys are exactly the field names;
// anything else is rejected.
struct JobConfig {
  std::string command;
  std::string experiment;
  std::string input;
  std::string output;
  std::string alpha_out;
  std::string beta_out;
  std::string report;
  std::string csv;
  std::string action;
  std::string kind = "random";
  std::string inject_fault;
  int n = 2;
  int k = 1;
  std::size_t N = 64;
  double L = 1.0;
  double p = 2.0;
  double q = 2.0;
  double alpha = 1.0;
  std::uint64_t seed = 1;
  int mu = 0;
  int nu = 1;
  int n_max = 5;
  int corpus_size = 0;  // 0 picks the job's own default
  int count = 50;
  double tolerance = 1e-10;
  double fit_tolerance = 0.05;
  double sigma_cells = 0;  // 0 picks the experiment's own default
  std::vector<int> j_list{0, 1, 2};
  std::vector<std::size_t> resolutions{32, 64, 128};

  nlohmann::json to_json() const;
  // Overwrites the fields present in j; throws std::invalid_argument on
  // unknown keys or mistyped values.
  void merge(const nlohmann::json &j);
};

enum ExitCode { kPass = 0, kCheckFailure = 1, kUsageError = 2 };

int run_cli(int argc, char **argv);

}  // namespace hodge
