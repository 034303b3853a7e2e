#pragma once

// Verification suites behind `naklab verify`. Each produces a JSON-ready
// report; checks inside a suite run on the worker pool and are merged in a
// fixed order.

#include "naklab/operators.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace naklab {

struct SuiteConfig {
  AlgebraPtr alg;
  int max_n = 4;
  int max_k = 3;
  std::uint64_t seed = 1;
  /// Sampled mode-list pairs for the tau suite.
  int samples = 40;
  OperatorOptions options;
};

struct SuiteFailure {
  nlohmann::ordered_json inputs;
  std::string expected;
  std::string got;
};

struct SuiteReport {
  std::string suite;
  std::size_t checks = 0;
  std::size_t failure_count = 0;
  /// The first few failures, in check order.
  std::vector<SuiteFailure> failures;
  bool passed() const { return failure_count == 0; }
};

const std::vector<std::string>& suite_names();

/// Throws InputError for an unknown suite; GenerationFailure propagates from iso.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

nlohmann::ordered_json to_json(const SuiteReport& report);

}  // namespace naklab
