#include <conelift/error.hpp>

namespace conelift {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::ProjectiveDenominatorVanishes: return "ProjectiveDenominatorVanishes";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::HullDataInconsistent: return "HullDataInconsistent";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::FactorizationInvalid: return "FactorizationInvalid";
    case ErrorCode::RecoveryNotUnique: return "RecoveryNotUnique";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::FiberEmpty: return "FiberEmpty";
    case ErrorCode::DegenerateImage: return "DegenerateImage";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace conelift
