#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphcode {

// Command-line front end.  Returns the process exit code:
//   0 success / verification passed
//   1 verification failure
//   2 input error (bad arguments, parse errors, constraint violations)
//   3 resource bound exceeded
// All ordinary output goes to `out`, diagnostics to `err`; results are
// deterministic for fixed inputs, seeds, and tolerance regardless of the
// thread count.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace graphcode
