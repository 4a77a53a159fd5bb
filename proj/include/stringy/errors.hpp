#ifndef STRINGY_ERRORS_HPP
#define STRINGY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stringy {

enum class ErrorCode {
  NonExactDivision,
  NotAPowerSeries,
  PoleAtOne,
  NonPolynomialPoincareSeries,
  InvalidExponent,
  NotCanonical,
  DependentGenerators,
  HigherOrderPole,
  NonGorensteinUnsupported,
  SignViolation,
  TooManyVariables,
  MalformedInput,
};

const char* errorCodeName(ErrorCode code);

// Every failed precondition or detected inconsistency carries one of the codes
// above; the CLI maps MalformedInput to exit status 2 and everything else to 3.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(errorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace stringy

#endif
