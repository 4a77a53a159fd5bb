#include "stringy/stringy_rational.hpp"

#include <algorithm>
#include <sstream>

#include "stringy/errors.hpp"
#include "stringy/upoly.hpp"

namespace stringy {

BiPoly StringyRational::expandedDenominator() const {
  BiPoly result = BiPoly::constant(1);
  for (const int m : denomExponents) {
    BiPoly factor = BiPoly::qPower(m);
    factor.addTerm(0, 0, -1);
    result *= factor;
  }
  return result;
}

StringyRational& StringyRational::operator*=(const Rat& scalar) {
  numerator *= scalar;
  return *this;
}

StringyRational& StringyRational::operator*=(const BiPoly& poly) {
  numerator *= poly;
  return *this;
}

namespace {

// Union multiset (max multiplicity per exponent) and the complementary
// factors each summand still needs.
std::multiset<int> denomUnion(const std::multiset<int>& a, const std::multiset<int>& b) {
  std::multiset<int> result;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && *ia < *ib)) {
      result.insert(*ia++);
    } else if (ia == a.end() || *ib < *ia) {
      result.insert(*ib++);
    } else {
      result.insert(*ia);
      ++ia;
      ++ib;
    }
  }
  return result;
}

BiPoly expandFactors(const std::multiset<int>& exponents) {
  BiPoly result = BiPoly::constant(1);
  for (const int m : exponents) {
    BiPoly factor = BiPoly::qPower(m);
    factor.addTerm(0, 0, -1);
    result *= factor;
  }
  return result;
}

std::multiset<int> multisetDifference(const std::multiset<int>& big,
                                      const std::multiset<int>& small) {
  std::multiset<int> result = big;
  for (const int m : small) {
    const auto it = result.find(m);
    if (it != result.end()) result.erase(it);
  }
  return result;
}

}  // namespace

StringyRational& StringyRational::operator+=(const StringyRational& other) {
  const std::multiset<int> unionDen = denomUnion(denomExponents, other.denomExponents);
  BiPoly left = numerator * expandFactors(multisetDifference(unionDen, denomExponents));
  BiPoly right =
      other.numerator * expandFactors(multisetDifference(unionDen, other.denomExponents));
  const int shift = std::min(qShift, other.qShift);
  left *= BiPoly::qPower(qShift - shift);
  right *= BiPoly::qPower(other.qShift - shift);
  numerator = left + right;
  denomExponents = unionDen;
  qShift = shift;
  return *this;
}

StringyRational& StringyRational::operator-=(const StringyRational& other) {
  StringyRational negated = other;
  negated.numerator = -negated.numerator;
  return *this += negated;
}

StringyRational StringyRational::normalized() const {
  StringyRational result = *this;
  if (result.qShift > 0) {
    result.numerator *= BiPoly::qPower(result.qShift);
    result.qShift = 0;
  }
  return result;
}

bool crossEqual(const StringyRational& f, const StringyRational& g) {
  BiPoly left = f.numerator * g.expandedDenominator();
  BiPoly right = g.numerator * f.expandedDenominator();
  const int shift = std::min(f.qShift, g.qShift);
  left *= BiPoly::qPower(f.qShift - shift);
  right *= BiPoly::qPower(g.qShift - shift);
  return left == right;
}

StringyRational dualTransform(const StringyRational& f, int dim) {
  // (uv)^-m - 1 = -(uv)^-m ((uv)^m - 1) turns each inverted denominator
  // factor back into a standard one at the cost of a sign and a q power.
  const int m = f.numerator.maxSingleExponent();
  int sumExponents = 0;
  for (const int e : f.denomExponents) sumExponents += e;
  StringyRational result;
  result.numerator = f.numerator.reciprocal(m);
  if (f.denomExponents.size() % 2 == 1) result.numerator = -result.numerator;
  result.denomExponents = f.denomExponents;
  result.qShift = dim - f.qShift - m + sumExponents;
  return result;
}

std::map<std::pair<int, int>, Rat> seriesCoefficients(const StringyRational& f,
                                                      int maxTotalDegree) {
  if (maxTotalDegree < 0) {
    throw DomainError(ErrorCode::MalformedInput, "negative series degree");
  }
  // Diagonal expansion of 1 / prod((uv)^m - 1) = (-1)^#factors *
  // prod(sum_k q^{mk}) as a power series in q, truncated at q^K. K covers
  // every monomial reported below as well as every monomial with a negative
  // exponent that a negative qShift could produce.
  const int K = maxTotalDegree + std::max(0, -f.qShift);
  std::vector<Rat> diag(size_t(K) + 1, Rat(0));
  diag[0] = 1;
  for (const int m : f.denomExponents) {
    std::vector<Rat> next(size_t(K) + 1, Rat(0));
    for (int base = 0; base <= K; ++base) {
      if (diag[size_t(base)] == 0) continue;
      for (int k = base; k <= K; k += m) next[size_t(k)] -= diag[size_t(base)];
    }
    diag = std::move(next);
  }
  std::map<std::pair<int, int>, Rat> expansion;
  for (const auto& [e, c] : f.numerator.terms()) {
    for (int k = 0; k <= K; ++k) {
      if (diag[size_t(k)] == 0) continue;
      const int i = e.u + k + f.qShift;
      const int j = e.v + k + f.qShift;
      if (i >= 0 && j >= 0 && i + j > maxTotalDegree) continue;
      const auto key = std::make_pair(i, j);
      const Rat value = c * diag[size_t(k)];
      auto [it, inserted] = expansion.try_emplace(key, value);
      if (!inserted) {
        it->second += value;
        if (it->second == 0) expansion.erase(it);
      }
    }
  }
  std::map<std::pair<int, int>, Rat> result;
  for (const auto& [key, c] : expansion) {
    if (key.first < 0 || key.second < 0) {
      throw DomainError(ErrorCode::NotAPowerSeries,
                        "negative exponents survive the expansion");
    }
    result.emplace(key, c);
  }
  return result;
}

Rat limitAtOne(const StringyRational& f) {
  upoly::Poly num = f.numerator.substituteDiagonal();
  upoly::Poly den{Rat(1)};
  for (const int m : f.denomExponents) {
    upoly::Poly factor(size_t(2 * m) + 1, Rat(0));
    factor[size_t(2 * m)] = 1;
    factor[0] = -1;
    den = upoly::mul(den, factor);
  }
  if (f.qShift >= 0) {
    upoly::Poly shift(size_t(2 * f.qShift) + 1, Rat(0));
    shift.back() = 1;
    num = upoly::mul(num, shift);
  } else {
    upoly::Poly shift(size_t(-2 * f.qShift) + 1, Rat(0));
    shift.back() = 1;
    den = upoly::mul(den, shift);
  }
  const upoly::Poly common = upoly::gcd(num, den);
  if (!upoly::isZero(common) && common.size() > 1) {
    num = upoly::exactDivide(num, common);
    den = upoly::exactDivide(den, common);
  }
  const Rat denAtOne = upoly::evaluate(den, 1);
  if (denAtOne == 0) {
    throw DomainError(ErrorCode::PoleAtOne, "denominator vanishes at u = v = 1");
  }
  return upoly::evaluate(num, 1) / denAtOne;
}

std::string to_string(const StringyRational& f) {
  if (f.isZero()) return "0";
  const bool hasTail = !f.denomExponents.empty() || f.qShift != 0;
  std::ostringstream out;
  if (hasTail) {
    out << "(" << to_string(f.numerator) << ")";
  } else {
    out << to_string(f.numerator);
  }
  if (!f.denomExponents.empty()) {
    out << " / ";
    bool first = true;
    for (const int m : f.denomExponents) {
      if (!first) out << "*";
      out << "((uv)^" << m << " - 1)";
      first = false;
    }
  }
  if (f.qShift != 0) out << " * (uv)^" << f.qShift;
  return out.str();
}

}  // namespace stringy
