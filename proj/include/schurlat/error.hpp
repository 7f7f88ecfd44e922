#ifndef SCHURLAT_ERROR_HPP_
#define SCHURLAT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace schurlat {

// Every failure the library can report. The CLI maps these onto exit codes
// and onto the "error" field of its JSON error object.
enum class ErrorCode {
  // cartan-core
  NonSymmetrizable,
  BadDiagonal,
  BadOffDiagonal,
  BadOrientation,
  NonPositiveSymmetrizer,
  DimensionMismatch,
  NotAdjacent,
  Overflow,
  // weyl-roots
  IndexOutOfRange,
  IsotropicReflection,
  NonIntegralResult,
  BoundTooSmall,
  NonIntegralDual,
  IsotropicRoot,
  InfiniteType,
  GroupTooLarge,
  // schur-roots
  InvariantBroken,
  NotARealRoot,
  DualMissing,
  // h-algebra / modrep
  BadField,
  ShapeMismatch,
  InvalidRep,
  NotLocallyFree,
  FieldTooSmall,
  NotRigidIndecomposable,
  NotFound,
  // tilting
  AtlasIncomplete,
  KeyMissing,
  // gentle-c2
  InvalidString,
  UndefinedCase,
  // io
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  std::string const& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace schurlat

#endif  // SCHURLAT_ERROR_HPP_
