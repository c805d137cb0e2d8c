#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fano::cli {

inline constexpr std::string_view kVersion = "1.0.0";

/// Runs one command line (without the program name). Exit codes: 0 on
/// success, 1 for a computation error, 2 for a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fano::cli
