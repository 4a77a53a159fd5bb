#ifndef STRINGY_STRINGY_RATIONAL_HPP
#define STRINGY_STRINGY_RATIONAL_HPP

#include <map>
#include <set>
#include <string>
#include <utility>

#include "stringy/bipoly.hpp"

namespace stringy {

// Restricted rational function: (uv)^qShift * numerator / prod((uv)^m - 1).
// Carrier of stringy E-functions and singularity contributions. Values are
// never reduced to lowest terms; equality is by cross multiplication.
struct StringyRational {
  BiPoly numerator;
  std::multiset<int> denomExponents;  // each m >= 1 stands for (uv)^m - 1
  int qShift = 0;

  StringyRational() = default;
  explicit StringyRational(BiPoly poly) : numerator(std::move(poly)) {}

  bool isZero() const { return numerator.isZero(); }
  BiPoly expandedDenominator() const;

  StringyRational& operator*=(const Rat& scalar);
  StringyRational& operator*=(const BiPoly& poly);
  StringyRational& operator+=(const StringyRational& other);
  StringyRational& operator-=(const StringyRational& other);

  friend StringyRational operator+(StringyRational a, const StringyRational& b) {
    return a += b;
  }
  friend StringyRational operator-(StringyRational a, const StringyRational& b) {
    return a -= b;
  }
  friend StringyRational operator*(StringyRational a, const Rat& s) {
    return a *= s;
  }
  friend StringyRational operator*(StringyRational a, const BiPoly& p) {
    return a *= p;
  }

  // Folds a nonnegative qShift into the numerator; negative shifts are kept.
  StringyRational normalized() const;
};

// True iff the two values agree as rational functions: cross-multiplied
// numerators (with qShifts applied) are equal as BiPoly.
bool crossEqual(const StringyRational& f, const StringyRational& g);

// (uv)^dim * f(1/u, 1/v) in closed form, using monomial inversion on the
// numerator and (uv)^-m - 1 = -(uv)^-m ((uv)^m - 1) on denominator factors.
StringyRational dualTransform(const StringyRational& f, int dim);

// Power-series coefficients b_{i,j} for i + j <= maxTotalDegree, each factor
// 1/((uv)^m - 1) expanded as -sum_{k>=0} (uv)^{mk}. Only nonzero coefficients
// are present in the result. Throws DomainError(NotAPowerSeries) if monomials
// with a negative exponent survive the expansion.
std::map<std::pair<int, int>, Rat> seriesCoefficients(const StringyRational& f,
                                                      int maxTotalDegree);

// lim_{u,v -> 1} f, via u = v = t and exact univariate gcd reduction.
// Throws DomainError(PoleAtOne) if the reduced denominator vanishes at t = 1.
Rat limitAtOne(const StringyRational& f);

std::string to_string(const StringyRational& f);

}  // namespace stringy

#endif
