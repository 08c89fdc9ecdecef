#include "cyclotome/error.hpp"

namespace cyclotome {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::NoDefaultModulus: return "NoDefaultModulus";
    case ErrorCode::TableUnavailable: return "TableUnavailable";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::InvalidDifferenceSet: return "InvalidDifferenceSet";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::DegenerateIntersection: return "DegenerateIntersection";
    case ErrorCode::IncompatibleSubfieldModulus: return "IncompatibleSubfieldModulus";
    case ErrorCode::EqualIndices: return "EqualIndices";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::OracleBudgetExceeded: return "OracleBudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cyclotome
