#pragma once

// The golden table: one record per worked example, each value derived by an
// independent oracle and reproduced by the library.
//
// File format: tab-separated lines
//   id  inputs  value  method  provenance
// where value is a comma-separated list of reals; '#' starts a comment line.

#include <functional>
#include <string>
#include <vector>

namespace tlh {

struct GoldenRecord {
  std::string id;
  std::string inputs;
  std::vector<double> value;
  std::string method;
  std::string provenance;
};

struct GoldenCase {
  std::string id;
  std::string inputs;
  std::string method;
  std::string provenance;
  std::function<std::vector<double>()> oracle;
  std::function<std::vector<double>()> implementation;
};

inline constexpr double kGoldenTol = 1e-9;

const std::vector<GoldenCase>& golden_cases();

std::string default_golden_path();
std::vector<GoldenRecord> load_golden(const std::string& path);
void write_golden(const std::string& path, const std::vector<GoldenRecord>& records);
/// Evaluates every oracle.
std::vector<GoldenRecord> regenerate_golden();

}  // namespace tlh
