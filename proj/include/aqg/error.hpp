#pragma once

#include <stdexcept>
#include <string>

namespace aqg {

enum class ErrorCode {
  DivisionByZero,
  DimensionMismatch,
  Singular,
  AlgebraMismatch,
  DegenerateAlgebra,
  NoLocalUnit,
  NotRegular,
  NotComultiplication,
  NoCounit,
  NoAntipode,
  NoHaar,
  NonUniqueHaar,
  NotFaithful,
  NoModularElement,
  NotInvertible,
  NotProportional,
  NotInTensorProduct,
  ConvolutionMismatch,
  DualComultMismatch,
  DualStructureMismatch,
  NoStarStructure,
  BidualityFailure,
  NotACorep,
  UniversalConstructionFailure,
  DegenerateHomomorphism,
  ParseError,
  AxiomViolation,
  InvalidGroup,
};

const char* error_name(ErrorCode code);

// Falsification codes describe mathematics that did not hold; input codes
// describe data that could not be interpreted.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace aqg
