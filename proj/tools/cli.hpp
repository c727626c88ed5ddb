#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace backlimit::cli {

enum ExitCode : int { kOk = 0, kVerifyFail = 1, kInputError = 2, kCapExceeded = 3 };

/// Runs one command line (without the program name). The JSON report goes to
/// `out`, diagnostics to `err`; `render` also writes its SVG file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace backlimit::cli
