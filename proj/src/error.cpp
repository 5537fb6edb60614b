#include "divalg/error.hpp"

namespace divalg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::HeuristicInconclusive: return "HeuristicInconclusive";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::ResultNotInBaseField: return "ResultNotInBaseField";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NonCommutative: return "NonCommutative";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::NotMaximalOrder: return "NotMaximalOrder";
    case ErrorCode::NoBalancedProduct: return "NoBalancedProduct";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::SearchBoundExceeded: return "SearchBoundExceeded";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::NonTorsionPairingValue: return "NonTorsionPairingValue";
    case ErrorCode::StabilityCheckFailed: return "StabilityCheckFailed";
    case ErrorCode::CrossCheckFailed: return "CrossCheckFailed";
    case ErrorCode::CatalogError: return "CatalogError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace divalg
