#ifndef STRINGY_UPOLY_HPP
#define STRINGY_UPOLY_HPP

#include <vector>

#include "stringy/rational.hpp"

// Dense univariate polynomials over Q, used for the diagonal substitution
// u = v = t and for Poincare-series division. Coefficient vectors are indexed
// by degree and kept trimmed (no trailing zeros; the zero polynomial is {}).
namespace stringy::upoly {

using Poly = std::vector<Rat>;

void trim(Poly& p);
bool isZero(const Poly& p);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
// 1 - t^n.
Poly oneMinusPower(int n);
Rat evaluate(const Poly& p, const Rat& x);
// Quotient and remainder; divisor must be nonzero.
void divmod(const Poly& num, const Poly& div, Poly& quot, Poly& rem);
// Throws DomainError(NonExactDivision) if the remainder is nonzero.
Poly exactDivide(const Poly& num, const Poly& div);
// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

}  // namespace stringy::upoly

#endif
