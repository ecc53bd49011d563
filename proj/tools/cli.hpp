#pragma once

#include <vector>
#include <string>

namespace graphcodes::cli {

// Runs the command-line tool; returns the process exit code.
// 0 = success, 1 = decode or audit failure, 2 = usage or input error.
int run(const std::vector<std::string>& args);

}  // namespace graphcodes::cli
