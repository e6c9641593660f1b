// cli.hpp — command-line entry point, kept in the library so tests can call it
#pragma once

#include <string>
#include <vector>

namespace tripod {

// Runs one subcommand (spectrum, scan, eigen, compare, bfield, reproduce).
// args excludes the program name. Returns the process exit status:
// 0 success, 2 invalid arguments/params, 3 numerical or I/O failure.
int runCommand(const std::vector<std::string>& args);

}  // namespace tripod
