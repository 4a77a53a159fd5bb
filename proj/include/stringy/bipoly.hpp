#ifndef STRINGY_BIPOLY_HPP
#define STRINGY_BIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "stringy/rational.hpp"

namespace stringy {

struct Exp2 {
  int u = 0;
  int v = 0;
  friend bool operator==(const Exp2&, const Exp2&) = default;
};

// Graded order with u-degree tie break: (u+v, u) ascending. The largest key of
// a term map is the leading monomial used by exactDivide.
struct GradedLess {
  bool operator()(const Exp2& a, const Exp2& b) const noexcept {
    const long da = long(a.u) + a.v;
    const long db = long(b.u) + b.v;
    if (da != db) return da < db;
    return a.u < b.u;
  }
};

// Sparse bivariate polynomial in u, v with exact rational coefficients.
// Stored coefficients are never zero.
class BiPoly {
 public:
  using TermMap = std::map<Exp2, Rat, GradedLess>;

  BiPoly() = default;

  static BiPoly constant(const Rat& c);
  static BiPoly monomial(int i, int j, const Rat& c);
  // (uv)^m for m >= 0.
  static BiPoly qPower(int m);
  // uv - 1.
  static BiPoly qMinusOne();

  bool isZero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rat coefficient(int i, int j) const;
  // Largest single exponent appearing, max over terms of max(i, j); 0 for the
  // zero polynomial.
  int maxSingleExponent() const;

  void setCoefficient(int i, int j, const Rat& c);
  void addTerm(int i, int j, const Rat& c);

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);
  BiPoly& operator*=(const Rat& scalar);
  BiPoly operator-() const;

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rat& s) { return a *= s; }
  friend BiPoly operator*(const Rat& s, BiPoly a) { return a *= s; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  // Value at u = v = 1 (the topological Euler characteristic when the
  // polynomial is a Hodge-Deligne polynomial).
  Rat evaluateAtOne() const;
  // Substitute u = v = t; dense coefficient vector indexed by t-degree.
  std::vector<Rat> substituteDiagonal() const;
  // Sum of c * u^(m-i) * v^(m-j) over terms; the monomial inversion used by
  // the duality transform. Requires m >= maxSingleExponent().
  BiPoly reciprocal(int m) const;

 private:
  TermMap terms_;
};

// Quotient of an exact division under the graded order above. Throws
// DomainError(NonExactDivision) if a nonzero remainder occurs.
BiPoly exactDivide(const BiPoly& num, const BiPoly& div);

std::string to_string(const BiPoly& p);

}  // namespace stringy

#endif
