#pragma once

#include <stdexcept>
#include <string>

namespace braids {

/// Violation of a documented precondition. Carries a stable machine-readable
/// code (e.g. "mismatched-n", "not-below") next to the human-readable detail.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

}  // namespace braids
