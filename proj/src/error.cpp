#include "ctri/error.hpp"

namespace ctri {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIdenticalPoints: return "identical-points";
    case ErrorCode::kIdenticalLines: return "identical-lines";
    case ErrorCode::kSingularMap: return "singular-map";
    case ErrorCode::kDegenerateTriangle: return "degenerate-triangle";
    case ErrorCode::kNonCollinearSelection: return "non-collinear-selection";
    case ErrorCode::kNoValidOrdering: return "no-valid-ordering";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kVerificationFailure: return "verification-failure";
    case ErrorCode::kForbiddenOrdinate: return "forbidden-ordinate";
    case ErrorCode::kPointOnAxis: return "point-on-axis";
    case ErrorCode::kNotDivisible: return "not-divisible";
    case ErrorCode::kNoBranchPair: return "no-branch-pair-found";
    case ErrorCode::kDegenerateSimilarTriples: return "degenerate-similar-triples";
    case ErrorCode::kNotConvex: return "not-convex";
    case ErrorCode::kConicMismatch: return "conic-mismatch";
    case ErrorCode::kOverlappingBlocks: return "overlapping-blocks";
    case ErrorCode::kDegenerateTriple: return "degenerate-triple";
    case ErrorCode::kNoRationalPoint: return "no-rational-point";
    case ErrorCode::kConstructionFailure: return "construction-failure";
    case ErrorCode::kHashMismatch: return "hash-mismatch";
    case ErrorCode::kInput: return "input-error";
  }
  return "unknown";
}

}  // namespace ctri
