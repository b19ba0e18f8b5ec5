#pragma once

#include <stdexcept>
#include <string>

namespace ctri {

enum class ErrorCode {
  kIdenticalPoints,
  kIdenticalLines,
  kSingularMap,
  kDegenerateTriangle,
  kNonCollinearSelection,
  kNoValidOrdering,
  kInvalidArgument,
  kVerificationFailure,
  kForbiddenOrdinate,
  kPointOnAxis,
  kNotDivisible,
  kNoBranchPair,
  kDegenerateSimilarTriples,
  kNotConvex,
  kConicMismatch,
  kOverlappingBlocks,
  kDegenerateTriple,
  kNoRationalPoint,
  kConstructionFailure,
  kHashMismatch,
  kInput,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ctri
