#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace torifol {

enum class ErrorKind {
  DimensionMismatch,
  ZeroVector,
  Unbounded,
  NotStronglyConvex,
  RedundantGenerator,
  Overlap,
  DanglingWall,
  InvalidFan,
  OutsideSupport,
  UnknownRay,
  UnknownCone,
  NotContained,
  NotQCartier,
  NonSimplicialFan,
  NonSmoothFan,
  NonZeroDelta,
  NegativeDelta,
  NotLogCanonical,
  NotProjective,
  NotExtremal,
  IterationCap,
  TheoremViolation,
  Parse,
  Validation,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library. `witness()` holds the indices of
/// the offending rays or cone where one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<int> witness = {})
      : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

  [[nodiscard]] ErrorKind kind() const { return kind_; }
  [[nodiscard]] const std::vector<int>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<int> witness_;
};

}  // namespace torifol
