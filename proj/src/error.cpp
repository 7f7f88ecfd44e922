#include "schurlat/error.hpp"

namespace schurlat {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSymmetrizable: return "NonSymmetrizable";
    case ErrorCode::BadDiagonal: return "BadDiagonal";
    case ErrorCode::BadOffDiagonal: return "BadOffDiagonal";
    case ErrorCode::BadOrientation: return "BadOrientation";
    case ErrorCode::NonPositiveSymmetrizer: return "NonPositiveSymmetrizer";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::IsotropicReflection: return "IsotropicReflection";
    case ErrorCode::NonIntegralResult: return "NonIntegralResult";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::NonIntegralDual: return "NonIntegralDual";
    case ErrorCode::IsotropicRoot: return "IsotropicRoot";
    case ErrorCode::InfiniteType: return "InfiniteType";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::InvariantBroken: return "InvariantBroken";
    case ErrorCode::NotARealRoot: return "NotARealRoot";
    case ErrorCode::DualMissing: return "DualMissing";
    case ErrorCode::BadField: return "BadField";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidRep: return "InvalidRep";
    case ErrorCode::NotLocallyFree: return "NotLocallyFree";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::NotRigidIndecomposable: return "NotRigidIndecomposable";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::AtlasIncomplete: return "AtlasIncomplete";
    case ErrorCode::KeyMissing: return "KeyMissing";
    case ErrorCode::InvalidString: return "InvalidString";
    case ErrorCode::UndefinedCase: return "UndefinedCase";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace schurlat
