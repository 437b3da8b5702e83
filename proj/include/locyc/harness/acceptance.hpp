#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "locyc/harness/config.hpp"

namespace locyc::harness {

inline constexpr int kCriterionCount = 14;

/// Criterion ids in a suite: acceptance runs 1..14, smoke a fast subset.
/// Throws InputError for an unknown suite.
std::vector<int> suite_criteria(std::string_view suite);

std::string criterion_name(int id);

/// Wall-clock bound stated for a criterion, or 0 when none is stated.
double criterion_time_limit(int id);

/// Deterministic payload for criteria 1..13: {id, name, verdict (PASS, FAIL
/// or WARN), detail, metrics}. Criterion 14 needs the other records and is
/// evaluated by run_suite.
Json run_criterion(int id, std::uint64_t seed);

struct SuiteLine {
  int id = 0;
  std::string name;
  std::string verdict;  // PASS | FAIL | WARN
  std::string detail;
  double seconds = 0.0;
};

struct SuiteSummary {
  std::string suite;
  std::vector<SuiteLine> lines;
  Json records = Json::array();  // one ResultRecord per criterion run
  bool passed() const;           // no FAIL lines
};

/// Runs every criterion of the suite, each as its own `reproduce` record,
/// then criterion 14 by re-executing those records. A criterion exceeding its
/// stated time limit is a FAIL. Prints one line per criterion to `progress`
/// when given.
SuiteSummary run_suite(std::string_view suite, std::uint64_t seed, std::ostream* progress = nullptr);

std::string format_line(const SuiteLine& line);

}  // namespace locyc::harness
