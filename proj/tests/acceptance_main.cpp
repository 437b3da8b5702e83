// Runs every acceptance criterion and prints one PASS/FAIL/WARN line each.
// Exit status is nonzero when any criterion fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "locyc/harness/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  if (const char* env = std::getenv("LOCYC_SEED")) seed = std::stoull(env);
  const std::string suite = argc > 1 ? argv[1] : "acceptance";
  const auto summary = locyc::harness::run_suite(suite, seed, &std::cout);
  std::size_t failed = 0;
  for (const auto& line : summary.lines) failed += line.verdict == "FAIL";
  std::cout << suite << ": " << summary.lines.size() - failed << "/" << summary.lines.size() << " criteria without FAIL\n";
  return failed == 0 ? 0 : 1;
}
