#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "osw/vertex.hpp"

namespace osw {

// Parsed CLI invocation. Same config must always reproduce byte-identical
// CSV/JSON outputs, for any thread count.
struct ExperimentConfig {
  std::string command;          // generate|route|census|sphere-check|bounds|experiment
  std::string experiment_kind;  // routing|census
  std::vector<int> n_list;      // single entry for non-experiment commands
  std::int32_t trials = 1000;
  std::uint64_t seed = 0;
  double lambda = 1.0;
  std::optional<double> r;      // sphere-check override
  std::string csv_path;
  bool json_output = false;
  int threads = 1;
  bool strict = false;
  bool osw_sample = false;      // generate --osw
  bool exact_n1 = false;        // census --exact-n1
  std::optional<Vertex> src;
  std::optional<Vertex> dst;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

// Dispatches a validated config. Returns kExitOk, kExitUsage on parameter
// problems, or kExitRuntime on runtime failures (e.g. a routing loop under
// --strict).
int run(const ExperimentConfig& config, std::ostream& out);

}  // namespace osw
