#pragma once

#include <stdexcept>
#include <string>

namespace qeei {

enum class ErrorKind {
  kZeroDivisor,
  kDimensionMismatch,
  kNotSquare,
  kNotHermitian,
  kIndexOutOfRange,
  kComplexityLimit,
  kNotSymmetric,
  kNoConvergence,
  kGroupingFailure,
  kDegenerateEigenvalue,
  kPivotFailure,
  kNoZeroEigenvalue,
  kIdentityViolation,
};

const char* to_string(ErrorKind kind) noexcept;

// Every library failure is reported through this one exception type; the
// kind() tag drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qeei
