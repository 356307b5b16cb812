#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flaginv {

// Runs one command-line invocation (arguments without the program name) and
// writes the report to `out`.  Returns the process exit status:
//   0  success, report written
//   1  domain error (input outside an operation's mathematical domain),
//      with a machine-readable { "error": { "code", "message" } } object
//   2  parse or usage error (malformed file, unknown flag), same error shape
// Reports are byte-identical across repeated runs on the same input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flaginv
