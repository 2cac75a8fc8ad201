#pragma once

#include <stdexcept>
#include <string>

namespace gmaxent {

// Base classes map onto CLI exit codes: ValidationError -> 2,
// NumericError -> 3, VerificationError -> 4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : Error {
  using Error::Error;
};

struct NumericError : Error {
  using Error::Error;
};

struct VerificationError : Error {
  using Error::Error;
};

// group_core
struct NonInvertibleGenerator : ValidationError {
  using ValidationError::ValidationError;
};
struct OrderBoundExceeded : ValidationError {
  using ValidationError::ValidationError;
};
struct DimensionMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct SpaceNotInvariant : ValidationError {
  using ValidationError::ValidationError;
};
struct SpaceMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct OddL : ValidationError {
  using ValidationError::ValidationError;
};

// poly_invariants
struct SyntaxError : ValidationError {
  size_t position;
  SyntaxError(const std::string& msg, size_t pos)
      : ValidationError(msg + " at position " + std::to_string(pos)), position(pos) {}
};
struct UnknownVariable : ValidationError {
  using ValidationError::ValidationError;
};
struct LengthMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct ArityMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct EmptyA : ValidationError {
  using ValidationError::ValidationError;
};
struct SignatureCollision : VerificationError {
  int orbit1, orbit2;
  SignatureCollision(int o1, int o2)
      : VerificationError("orbit signature collision between orbits " + std::to_string(o1) +
                          " and " + std::to_string(o2) + " (generator set does not separate)"),
        orbit1(o1), orbit2(o2) {}
};

// maxent_solver
struct AbsoluteContinuityViolation : ValidationError {
  int cell;
  explicit AbsoluteContinuityViolation(int k)
      : ValidationError("absolute continuity violated: p > 0 but q = 0 at cell " +
                        std::to_string(k)),
        cell(k) {}
};
struct ShapeMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct RankDeficient : ValidationError {
  int column;
  explicit RankDeficient(int col, const std::string& what)
      : ValidationError("constraint features rank-deficient at column " + std::to_string(col) +
                        " (" + what + ")"),
        column(col) {}
};
struct NotRealizable : NumericError {
  using NumericError::NumericError;
};
struct MaxIterations : NumericError {
  using NumericError::NumericError;
};

// model_builder
struct InsufficientRank : ValidationError {
  using ValidationError::ValidationError;
};

// imagery
struct ParseError : ValidationError {
  using ValidationError::ValidationError;
};
struct TruncatedFile : ValidationError {
  using ValidationError::ValidationError;
};
struct BadDimensions : ValidationError {
  using ValidationError::ValidationError;
};
struct LevelOutOfRange : ValidationError {
  using ValidationError::ValidationError;
};
struct EmptyList : ValidationError {
  using ValidationError::ValidationError;
};
struct InconsistentK : ValidationError {
  using ValidationError::ValidationError;
};

}  // namespace gmaxent
