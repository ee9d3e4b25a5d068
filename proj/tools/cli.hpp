#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arcfix::cli {

enum ExitCode { kOk = 0, kUsage = 2, kParse = 3, kOracleCap = 4 };

/// args excludes the program name. JSON (or graph text for gen) goes to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arcfix::cli
