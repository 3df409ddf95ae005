#include "schurkit/error.hpp"

namespace schurkit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NodeOutsideDiagram: return "node-outside-diagram";
    case ErrorCode::LTooSmall: return "L-too-small";
    case ErrorCode::NotAPolynomial: return "not-a-polynomial";
    case ErrorCode::NonIntegerConstant: return "non-integer-constant";
    case ErrorCode::Pole: return "pole";
    case ErrorCode::ConstantDenominatorVanishes: return "constant-denominator-vanishes-mod-p";
    case ErrorCode::ThreeVariableForm: return "substitution-would-create-three-variable-form";
    case ErrorCode::PreconditionViolation: return "precondition-violation";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Parse: return "parse-error";
  }
  return "unknown";
}

}  // namespace schurkit
