#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace locyc::harness {

/// The `locyc` front end. `args` excludes the program name. Prints one
/// JSON-lines record per run to `out` (and appends it to --records when
/// given); diagnostics and usage go to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace locyc::harness
