#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace irrlab {

enum class ErrorCode {
  kOutOfRangeVertex,
  kSelfLoop,
  kTooLarge,
  kTooSmall,
  kMalformedGraph6,
  kMalformedEdgeList,
  kNonPositiveP,
  kCompleteGraph,
  kInvalidSpine,
  kInvalidParams,
  kBadProbability,
  kKindMismatch,
  kInadmissibleParams,
  kBudgetExceeded,
  kUnknownClaimId,
  kNotAFailure,
  kBadClassSpec,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace irrlab
