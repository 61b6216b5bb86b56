#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chromsym {

enum class ErrorCode {
  NotWeaklyIncreasing,
  OutOfRange,
  SizeMismatch,
  NotProper,
  Infeasible,
  Parse,
  Unsupported,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Raised for invalid input to any library operation. `code()` names the
/// violated invariant; `what()` carries a human-readable detail.
class Error : public std::invalid_argument {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::invalid_argument(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotWeaklyIncreasing: return "NotWeaklyIncreasing";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

}  // namespace chromsym
