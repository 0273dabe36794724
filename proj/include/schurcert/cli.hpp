#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schurcert::cli {

enum ExitCode : int {
  ok = 0,
  computation_error = 1,
  parse_error = 2,
  counterexample = 10,
};

/// Runs one command. `args` excludes the program name. The single JSON
/// document goes to `out`, diagnostics to `err`. `in` feeds `verify -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace schurcert::cli
