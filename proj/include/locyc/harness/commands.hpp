#pragma once

#include <string>

#include "locyc/harness/config.hpp"

namespace locyc::harness {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitHypothesis = 1;
inline constexpr int kExitInput = 2;

/// Result of one run. The payload is a pure function of the config; timing
/// and other run-specific data live in the record around it.
struct Outcome {
  Json payload = Json::object();
  Json validation = Json::object();
  int exit_code = kExitSuccess;
  std::string status = "ok";  // ok | hypothesis-failure
};

/// Runs one subcommand. Hypothesis failures become exit code 1 with the
/// message in the payload; InputError propagates to the caller.
Outcome execute(const ExperimentConfig& config);

/// The self-describing record around an outcome.
Json make_record(const ExperimentConfig& config, const Outcome& outcome, double seconds);

/// Re-executes the config embedded in a record and compares payload bytes.
bool reproduces(const Json& record);

}  // namespace locyc::harness
