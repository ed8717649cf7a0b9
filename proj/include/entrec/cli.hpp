#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace entrec {

// Runs one CLI invocation (without the program name).  Writes a single JSON
// document to `out` on success and JSON error detail to `err` on failure.
// Exit codes: 0 = answer computed (the verdict lives in the JSON, never in
// the code), 2 = input error, 3 = internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entrec
