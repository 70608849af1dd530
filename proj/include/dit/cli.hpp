#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dit {

/// Runs the `dit` command line. `args` excludes the program name. Returns
/// the exit status: 0 success, 1 verification mismatch under --assert,
/// 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dit
