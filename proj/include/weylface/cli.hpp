#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylface {

/// Runs the command-line front end on the given arguments (program name
/// excluded). Returns the process exit code: 0 on success, 1 on domain
/// errors (violated mathematical hypotheses, failed verification), 2 on
/// usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace weylface
