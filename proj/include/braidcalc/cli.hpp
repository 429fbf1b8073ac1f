#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidcalc {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs one command line (without the program name). `in` backs file
/// arguments given as "-". Output goes to `out`,
/// one-line diagnostics to `err`. The default output format is json when
/// BRAIDCALC_FORMAT=json is set, text otherwise.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace braidcalc
