#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schurkit {

enum class ErrorCode {
  NodeOutsideDiagram,
  LTooSmall,
  NotAPolynomial,
  NonIntegerConstant,
  Pole,
  ConstantDenominatorVanishes,
  ThreeVariableForm,
  PreconditionViolation,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries a machine-readable code so the
// CLI can map it onto exit statuses and tests can match on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace schurkit
