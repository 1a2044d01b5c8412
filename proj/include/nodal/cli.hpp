#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nodal {

/// Entry point of the `nodal` command-line tool. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nodal
