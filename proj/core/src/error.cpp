#include "qeei/error.hpp"

namespace qeei {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kZeroDivisor: return "ZeroDivisor";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kNotSquare: return "NotSquare";
    case ErrorKind::kNotHermitian: return "NotHermitian";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kComplexityLimit: return "ComplexityLimit";
    case ErrorKind::kNotSymmetric: return "NotSymmetric";
    case ErrorKind::kNoConvergence: return "NoConvergence";
    case ErrorKind::kGroupingFailure: return "GroupingFailure";
    case ErrorKind::kDegenerateEigenvalue: return "DegenerateEigenvalue";
    case ErrorKind::kPivotFailure: return "PivotFailure";
    case ErrorKind::kNoZeroEigenvalue: return "NoZeroEigenvalue";
    case ErrorKind::kIdentityViolation: return "IdentityViolation";
  }
  return "Unknown";
}

}  // namespace qeei
