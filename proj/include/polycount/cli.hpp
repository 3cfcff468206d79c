// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polycount {

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2, exit_resource = 3, exit_io = 4 };

// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycount
