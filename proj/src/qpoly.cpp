#include "stringy/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace stringy {

QPoly QPoly::constant(const Rat& c) {
  QPoly p;
  p.addTerm(0, c);
  return p;
}

QPoly QPoly::qPower(long m) {
  QPoly p;
  p.addTerm(m, 1);
  return p;
}

Rat QPoly::coefficient(long m) const {
  const auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

long QPoly::minExponent() const {
  if (isZero()) throw std::logic_error("minExponent of zero polynomial");
  return coeffs_.begin()->first;
}

long QPoly::maxExponent() const {
  if (isZero()) throw std::logic_error("maxExponent of zero polynomial");
  return coeffs_.rbegin()->first;
}

bool QPoly::allCoefficientsNonNegative() const {
  for (const auto& [m, c] : coeffs_) {
    if (c < 0) return false;
  }
  return true;
}

void QPoly::addTerm(long m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

QPoly& QPoly::operator+=(const QPoly& other) {
  for (const auto& [m, c] : other.coeffs_) addTerm(m, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  for (const auto& [m, c] : other.coeffs_) addTerm(m, -c);
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly result;
  for (const auto& [ma, ca] : a.coefficients()) {
    for (const auto& [mb, cb] : b.coefficients()) {
      result.addTerm(ma + mb, ca * cb);
    }
  }
  return result;
}

QPoly& QPoly::operator*=(const QPoly& other) {
  *this = *this * other;
  return *this;
}

QPoly& QPoly::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [m, c] : coeffs_) c *= scalar;
  return *this;
}

BiPoly QPoly::toBiPoly() const {
  BiPoly result;
  for (const auto& [m, c] : coeffs_) {
    if (m < 0) {
      throw std::invalid_argument("QPoly with negative exponent does not embed into BiPoly");
    }
    result.addTerm(int(m), int(m), c);
  }
  return result;
}

std::string to_string(const QPoly& p) {
  if (p.isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const Rat mag = negative ? Rat(-c) : c;
    if (mag != 1 || m == 0) {
      out << to_string(mag);
      if (m != 0) out << "*";
    }
    if (m != 0) {
      out << "q";
      if (m != 1) out << "^" << m;
    }
  }
  return out.str();
}

}  // namespace stringy
