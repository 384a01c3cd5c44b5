#ifndef COXINV_ERROR_HPP
#define COXINV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxinv {

enum class ErrorCode {
  InvalidRank,
  IndexOutOfRange,
  MixedRootSystem,
  RankCapExceeded,
  WeylGroupCapExceeded,
  NonDominant,
  ZeroCharacter,
  WrongType,
  EmptySupport,
  NotApplicable,
  InvalidArgument,
  Internal,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MixedRootSystem: return "MixedRootSystem";
    case ErrorCode::RankCapExceeded: return "RankCapExceeded";
    case ErrorCode::WeylGroupCapExceeded: return "WeylGroupCapExceeded";
    case ErrorCode::NonDominant: return "NonDominant";
    case ErrorCode::ZeroCharacter: return "ZeroCharacter";
    case ErrorCode::WrongType: return "WrongType";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

/// All library failures are reported through this exception type; `code()`
/// identifies the failure class, `what()` carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coxinv

#endif  // COXINV_ERROR_HPP
