#include "aqg/error.hpp"

namespace aqg {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::DegenerateAlgebra: return "DegenerateAlgebra";
    case ErrorCode::NoLocalUnit: return "NoLocalUnit";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotComultiplication: return "NotComultiplication";
    case ErrorCode::NoCounit: return "NoCounit";
    case ErrorCode::NoAntipode: return "NoAntipode";
    case ErrorCode::NoHaar: return "NoHaar";
    case ErrorCode::NonUniqueHaar: return "NonUniqueHaar";
    case ErrorCode::NotFaithful: return "NotFaithful";
    case ErrorCode::NoModularElement: return "NoModularElement";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotProportional: return "NotProportional";
    case ErrorCode::NotInTensorProduct: return "NotInTensorProduct";
    case ErrorCode::ConvolutionMismatch: return "ConvolutionMismatch";
    case ErrorCode::DualComultMismatch: return "DualComultMismatch";
    case ErrorCode::DualStructureMismatch: return "DualStructureMismatch";
    case ErrorCode::NoStarStructure: return "NoStarStructure";
    case ErrorCode::BidualityFailure: return "BidualityFailure";
    case ErrorCode::NotACorep: return "NotACorep";
    case ErrorCode::UniversalConstructionFailure: return "UniversalConstructionFailure";
    case ErrorCode::DegenerateHomomorphism: return "DegenerateHomomorphism";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::InvalidGroup: return "InvalidGroup";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  return code == ErrorCode::ParseError || code == ErrorCode::DimensionMismatch || code == ErrorCode::InvalidGroup ||
         code == ErrorCode::AlgebraMismatch;
}

}  // namespace aqg
