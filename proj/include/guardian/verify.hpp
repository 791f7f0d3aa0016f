#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace guardian::verify {

/// Randomized property suites behind `guardian verify`.
inline const std::vector<std::string> kSuiteNames{"prop4", "cauchy-binet", "brackets", "ode", "lemma1"};

struct SuiteOptions {
  std::size_t n = 4;
  int trials = 20;
  std::uint64_t seed = 0;
  /// Negative control: a property name whose measured residuals get +1 added.
  std::optional<std::string> inject_fault;
};

struct Failure {
  std::string property;
  int trial = 0;
  std::uint64_t seed = 0;
  double residual = 0.0;
  double bound = 0.0;
  nlohmann::ordered_json instance;
};

struct PropertyResult {
  std::string name;
  double tolerance = 0.0;   ///< relative to the per-instance scale
  double max_residual = 0.0;
  double max_scaled = 0.0;  ///< max residual / scale
  int checks = 0;
  std::vector<Failure> failures;

  [[nodiscard]] bool pass() const { return failures.empty(); }
};

struct SuiteReport {
  std::string suite;
  SuiteOptions options;
  std::vector<PropertyResult> properties;

  [[nodiscard]] bool pass() const;
  [[nodiscard]] nlohmann::ordered_json to_json() const;
};

/// Runs one named suite, or every suite for "all". Throws std::invalid_argument for unknown names or bad n.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& options);

}  // namespace guardian::verify
