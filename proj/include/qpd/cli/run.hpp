#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpd::cli {

/// Runs the command line given argv-style arguments (program name
/// excluded). Output goes to `out`, diagnostics to `err`.
/// Exit status: 0 success, 1 usage error, 2 input/parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpd::cli
