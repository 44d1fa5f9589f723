#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qts {

// Every module reports failures through this type. `code` is a stable,
// machine-readable identifier ("unknown_point", "not_open", ...) that the CLI
// forwards verbatim in its error object.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace qts
