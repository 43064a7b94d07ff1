#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypernil::cli {

/// Exit codes of the command line tool.
enum ExitCode : int { ok = 0, failure = 1, invalid = 2 };

/// Runs the tool on args (without the program name). Reports go to out,
/// diagnostics to err. Returns 0 on success, 2 when the input algebra or
/// construction violates a validity condition (the report is still
/// written), 1 on usage, I/O and parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypernil::cli
