#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zdlab::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;

// Runs one command line (without the program name). Reads rings from `in`
// when a command is given "-" or no file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace zdlab::cli
