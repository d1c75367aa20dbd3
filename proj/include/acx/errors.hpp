#pragma once

#include <stdexcept>
#include <string>

namespace acx {

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what)
      : std::invalid_argument("dimension mismatch: " + what) {}
};

// A documented precondition of an operation does not hold for its input.
class PreconditionViolation : public std::invalid_argument {
 public:
  explicit PreconditionViolation(const std::string& what)
      : std::invalid_argument(what) {}
};

// An invariant that the mathematics guarantees failed to hold. Seeing this
// means a bug or corrupted input that slipped past validation.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace acx
