#pragma once

// Randomized verification suites behind `albert verify`.
//
// Every check reports max/mean residuals over its samples. Tolerances can be
// overridden per check with keys "<suite>.<check>". Reports are a pure
// function of the configuration: trial t of suite s draws from
// TrialRng(seed, s, t).

#include <cstddef>
#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace albert {

struct VerificationConfig {
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  std::map<std::string, double> tolerances;
  std::vector<std::string> suites;  // empty: all
};

enum class Bound { at_most, at_least };

struct CheckResult {
  std::string name;
  std::size_t samples = 0;
  double max = 0.0;
  double mean = 0.0;
  double tolerance = 0.0;
  Bound bound = Bound::at_most;
  bool passed = false;
  std::string note;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(std::string_view check) const;
};

struct Report {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<SuiteResult> suites;

  bool passed() const;
  const SuiteResult* find(std::string_view suite) const;
  nlohmann::json to_json() const;
};

/// octonion, jordan, e6, spectral, trace_identity, inner_automorphism, g2, dirac
const std::vector<std::string>& suite_names();

/// Default tolerance of every check, keyed "<suite>.<check>".
const std::map<std::string, double>& default_tolerances();

SuiteResult run_suite(const std::string& name, const VerificationConfig& config);

/// Throws Error(parse_error) for an unknown suite or tolerance name.
Report run_verification(const VerificationConfig& config);

}  // namespace albert
