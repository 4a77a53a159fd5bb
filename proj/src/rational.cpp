#include "stringy/rational.hpp"

#include <sstream>

#include "stringy/errors.hpp"

namespace stringy {

const char* errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonExactDivision: return "NonExactDivision";
    case ErrorCode::NotAPowerSeries: return "NotAPowerSeries";
    case ErrorCode::PoleAtOne: return "PoleAtOne";
    case ErrorCode::NonPolynomialPoincareSeries: return "NonPolynomialPoincareSeries";
    case ErrorCode::InvalidExponent: return "InvalidExponent";
    case ErrorCode::NotCanonical: return "NotCanonical";
    case ErrorCode::DependentGenerators: return "DependentGenerators";
    case ErrorCode::HigherOrderPole: return "HigherOrderPole";
    case ErrorCode::NonGorensteinUnsupported: return "NonGorensteinUnsupported";
    case ErrorCode::SignViolation: return "SignViolation";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "UnknownError";
}

std::string to_string(const Rat& r) {
  std::ostringstream out;
  out << numerator(r);
  if (!isInteger(r)) out << "/" << denominator(r);
  return out.str();
}

Rat parseRat(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    if (den == 0) throw DomainError(ErrorCode::MalformedInput, "zero denominator in '" + text + "'");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw DomainError(ErrorCode::MalformedInput, "invalid rational '" + text + "'");
  }
}

}  // namespace stringy
