#include "ybx/error.hpp"

namespace ybx {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::EmptyFiber: return "EmptyFiber";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::Incompatible: return "Incompatible";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotInvertibleInAlgebra: return "NotInvertibleInAlgebra";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::UnsupportedName: return "UnsupportedName";
    case ErrorCode::BadN: return "BadN";
    case ErrorCode::BadSymbol: return "BadSymbol";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::MissingGenerator: return "MissingGenerator";
    case ErrorCode::NotASolution: return "NotASolution";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FileNotFound: return "FileNotFound";
  }
  return "UnknownError";
}

}  // namespace ybx
