#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psl2mu {

/// Exit statuses of run_cli.
enum ExitStatus : int {
  exit_ok = 0,
  exit_check_failed = 1,  // an audit or brute comparison failed
  exit_bad_input = 2,     // usage, parse, or domain error in the input
  exit_cap_exceeded = 3,
};

/// Runs one command line. args excludes the program name. Output is
/// deterministic: identical arguments give byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psl2mu
