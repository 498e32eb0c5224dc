#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypervol::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,   // crosscheck failure, MC |z| > 4
    kInvalid = 2,
    kNotRealizable = 3,
    kNoConvergence = 4,
    kIoError = 5,
};

/// Runs one command line (without the program name). Records go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypervol::cli
