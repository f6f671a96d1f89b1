#pragma once

#include <iosfwd>

namespace msim::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kIo = 2,
    kDomain = 3,
};

/// Runs the `msim` command line. Results go to out, diagnostics to err.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace msim::cli
