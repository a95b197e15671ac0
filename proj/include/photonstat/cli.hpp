#pragma once

#include <string>
#include <vector>

namespace photonstat {

// Full command-line front end, separated from main() so tests can drive it
// in-process. args excludes the program name. Returns the process exit
// code: 0 success, 2 input or runtime failure, 3 simulation self-check
// failure (an outcome beyond 4 sigma), CLI11 codes for flag errors.
int run_cli(const std::vector<std::string>& args);

}  // namespace photonstat
