#ifndef STRINGY_QPOLY_HPP
#define STRINGY_QPOLY_HPP

#include <map>
#include <string>

#include "stringy/bipoly.hpp"
#include "stringy/rational.hpp"

namespace stringy {

// Univariate Laurent polynomial in q = uv. Carrier of the p_J polynomials and
// of Poincare-series style bookkeeping; embeds into BiPoly on its nonnegative
// part via q^m -> u^m v^m.
class QPoly {
 public:
  QPoly() = default;

  static QPoly constant(const Rat& c);
  static QPoly qPower(long m);

  bool isZero() const { return coeffs_.empty(); }
  const std::map<long, Rat>& coefficients() const { return coeffs_; }
  Rat coefficient(long m) const;
  long minExponent() const;  // requires nonzero
  long maxExponent() const;  // requires nonzero
  bool allCoefficientsNonNegative() const;

  void addTerm(long m, const Rat& c);

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);
  QPoly& operator*=(const Rat& scalar);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  // q^m -> u^m v^m; throws std::invalid_argument on negative exponents.
  BiPoly toBiPoly() const;

 private:
  std::map<long, Rat> coeffs_;  // exponent -> coefficient, no zeros
};

// Rendering in the variable q, exponents descending: "q^6 + q^5 + 2".
std::string to_string(const QPoly& p);

}  // namespace stringy

#endif
