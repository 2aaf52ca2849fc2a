// cli.hpp -- command-line dispatch, exposed as a library call so tests can
// drive subcommands in-process.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace z4::cli {

/// Runs one subcommand.  args holds the arguments in natural order, without
/// the program name.  Returns the process exit status.
int dispatch(std::vector<std::string> args, std::ostream& out,
             std::ostream& err);

}  // namespace z4::cli
