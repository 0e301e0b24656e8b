#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eadj {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitNumeric = 2,
  kExitUsage = 64,
};

/// Runs one command. `args` excludes the program name. Input is read from
/// --input when given, otherwise from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace eadj
