#pragma once

// Reproducible property suites. Each sample i draws from Rng(seed, i), so
// results do not depend on the thread count.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tlh/report.hpp"

namespace tlh {

struct SuiteOptions {
  std::size_t samples = 0;  ///< 0 selects the suite default
  std::uint64_t seed = 1;
  std::optional<double> tol;
  unsigned threads = 0;  ///< 0 selects hardware concurrency
  std::string golden_path;  ///< empty selects the built-in path
};

struct SuiteReport {
  std::string suite;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  Json details = Json::object();
  Json counterexample;  ///< null when every sample passed
  double wall_seconds = 0.0;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
std::size_t default_samples(const std::string& name);
double default_tolerance(const std::string& name);

/// Throws InvalidArgument for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

/// Wall time is included only when timing is set, keeping reports
/// byte-identical across runs otherwise.
Json to_json(const SuiteReport& report, bool timing);

/// Runs f(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& f);

}  // namespace tlh
