#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qts::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;

/// Runs one command line (`args` excludes the program name). Result JSON goes
/// to `out`; on failure an error object {code, message, path} is written to
/// `out` and kExitInvalid returned. Input flags accept "-" for `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qts::cli
