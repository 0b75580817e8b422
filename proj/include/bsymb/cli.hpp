#pragma once

#include <string>
#include <vector>

namespace bsymb::cli {

/// Runs one CLI command (args exclude the program name). Exit codes:
/// 0 = success with certified results, 1 = error or failed verification,
/// 2 = completed but uncertified.
int run(const std::vector<std::string>& args);

}  // namespace bsymb::cli
