// The thirteen property and reproduction checks, runnable individually or by suite.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dlim/io.hpp"

namespace dlim {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // one-line summary
  double seconds = 0;
  Json data;           // counts and exact witness values
};

enum class Suite { all, metrics, limits, spectral };

std::optional<Suite> parse_suite(const std::string& name);
const char* to_string(Suite suite);
std::vector<int> suite_criteria(Suite suite);

inline constexpr int criterion_count = 13;
std::string criterion_name(int id);

/// Deterministic in (id, seed) apart from the measured time.
CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_suite(Suite suite, std::uint64_t seed);

/// {"suite", "seed", "passed", "criteria": [...]}; times only when requested.
Json suite_report(Suite suite, std::uint64_t seed, const std::vector<CriterionResult>& results,
                  bool with_timing = false);

}  // namespace dlim
