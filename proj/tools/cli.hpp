#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sliderule::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDomain = 2,
    kVerificationFailed = 3,
    kNoSignChange = 4,
};

/// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sliderule::cli
