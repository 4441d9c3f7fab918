#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "triprod/classifier.hpp"

namespace triprod::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Parses "m,n;m,n;...". Throws std::invalid_argument on malformed input.
std::vector<ProbePair> parse_pairs(std::string_view text);

/// Runs one command. `args` excludes the program name. Results go to `out`
/// (text or JSON), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace triprod::cli
