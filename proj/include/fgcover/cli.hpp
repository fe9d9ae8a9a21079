#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fgc::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;     // unreadable or malformed input, usage errors
inline constexpr int kNotAPartition = 2;  // defective family, infinite index, non-transitive action
inline constexpr int kCheckFailed = 3;    // an identity or clause instance failed

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fgc::cli
