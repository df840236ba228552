#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace setkit::cli {

/// Runs one batch invocation. Returns the process exit code:
/// 0 success, 1 semantic negative (UNSAT, "not a lattice", "not a cover",
/// ...) with a report on stdout, 2 malformed input or schema violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace setkit::cli
