#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace x0calc::cli {

/// Exit statuses of the command-line front end.
enum Status { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Parses and dispatches one invocation (args excludes the program name).
/// Reports go to `out`; errors go to `err` as {"error": name, "message": text}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace x0calc::cli
