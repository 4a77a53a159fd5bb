#include "stringy/hodge.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "stringy/errors.hpp"
#include "stringy/upoly.hpp"

namespace stringy::hodge {

namespace {

Int binomial(long n, long m) {
  if (m > n || n < 0 || m < 0) return 0;
  if (m > n - m) m = n - m;
  Int result = 1;
  for (long i = 1; i <= m; ++i) {
    result *= n - m + i;
    result /= i;
  }
  return result;
}

void validateWeights(const WeightSystem& ws) {
  if (ws.weights.empty()) {
    throw DomainError(ErrorCode::MalformedInput, "weight system needs at least one weight");
  }
  long numeratorDegree = 0;
  for (const long w : ws.weights) {
    if (w <= 0 || w >= ws.degree) {
      throw DomainError(ErrorCode::MalformedInput,
                        "weights must satisfy 0 < w < degree");
    }
    numeratorDegree += ws.degree - w;
  }
  if (numeratorDegree > 200000) {
    throw DomainError(ErrorCode::MalformedInput, "weight system too large");
  }
}

}  // namespace

Int gNumber(long kappa, long lambda, long nu, long xi) {
  if (kappa < lambda) {
    throw DomainError(ErrorCode::MalformedInput, "gNumber requires kappa >= lambda");
  }
  Int sum = 0;
  for (long j = 0; j <= lambda; ++j) {
    const Int term = binomial(kappa + 1, j) * binomial(nu * (lambda - j) + xi, kappa);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

HodgePolynomial fermatHodge(int dim, long degree) {
  if (dim < 0 || degree < 1) {
    throw DomainError(ErrorCode::MalformedInput, "fermatHodge needs dim >= 0, degree >= 1");
  }
  BiPoly h;
  const int sign = (dim % 2 == 0) ? 1 : -1;
  for (int p = 0; p <= dim; ++p) {
    h.addTerm(p, p, 1);
    const Int g = gNumber(dim + 1, p + 1, degree - 1, p);
    h.addTerm(p, dim - p, Rat(sign * g));
  }
  return {h, VarietyKind::Projective};
}

std::vector<Int> milnorDimensions(const WeightSystem& ws) {
  validateWeights(ws);
  upoly::Poly num{Rat(1)};
  upoly::Poly den{Rat(1)};
  for (const long w : ws.weights) {
    num = upoly::mul(num, upoly::oneMinusPower(int(ws.degree - w)));
    den = upoly::mul(den, upoly::oneMinusPower(int(w)));
  }
  upoly::Poly quot, rem;
  upoly::divmod(num, den, quot, rem);
  if (!upoly::isZero(rem)) {
    throw DomainError(ErrorCode::NonPolynomialPoincareSeries,
                      "Poincare series of the Milnor algebra is not a polynomial");
  }
  std::vector<Int> dims;
  dims.reserve(quot.size());
  for (const Rat& c : quot) {
    if (!isInteger(c) || c < 0) {
      throw DomainError(ErrorCode::NonPolynomialPoincareSeries,
                        "Poincare series has a non-integral or negative coefficient");
    }
    dims.push_back(numerator(c));
  }
  return dims;
}

HodgePolynomial quasiHomHodge(const WeightSystem& ws) {
  const std::vector<Int> dims = milnorDimensions(ws);
  const long r = long(ws.weights.size()) - 1;
  const long weightSum = std::accumulate(ws.weights.begin(), ws.weights.end(), 0L);
  BiPoly linkPart;
  for (long p = 0; p <= r - 1; ++p) {
    const long index = (p + 1) * ws.degree - weightSum;
    if (index < 0 || index >= long(dims.size())) continue;
    linkPart.addTerm(int(p), int(r - 1 - p), Rat(dims[size_t(index)]));
  }
  BiPoly h = BiPoly::qPower(int(r));
  BiPoly correction = BiPoly::qMinusOne() * linkPart;
  if (r % 2 == 0) correction = -correction;  // (-1)^{r-1}
  h += correction;
  return {h, VarietyKind::Affine};
}

HodgePolynomial diagonalFaceHodge(const std::vector<long>& exponents) {
  if (exponents.empty()) {
    throw DomainError(ErrorCode::MalformedInput, "diagonalFaceHodge needs an exponent");
  }
  for (const long a : exponents) {
    if (a < 2) throw DomainError(ErrorCode::InvalidExponent, "exponents must be >= 2");
  }
  if (exponents.size() == 1) {
    // One variable: the zero set x^a = 0 is the origin only.
    return {BiPoly::constant(1), VarietyKind::Affine};
  }
  long lcm = 1;
  for (const long a : exponents) lcm = std::lcm(lcm, a);
  WeightSystem ws;
  ws.degree = lcm;
  for (const long a : exponents) ws.weights.push_back(lcm / a);
  return quasiHomHodge(ws);
}

HodgePolynomial torusHodge(const std::vector<long>& exponents, std::uint32_t subset) {
  const int d = int(exponents.size());
  if (d < 1 || d > 31) {
    throw DomainError(ErrorCode::TooManyVariables, "torusHodge supports 1..31 variables");
  }
  const std::uint32_t full = (d == 31) ? 0x7fffffffu : ((1u << d) - 1u);
  if ((subset & ~full) != 0 || subset == full) {
    throw DomainError(ErrorCode::MalformedInput, "subset must be a proper subset of the indices");
  }
  BiPoly inner;
  // Sum over J' with J <= J' < I of (-1)^{|J'|-|J|} (H(M_{J'}) - 1), where
  // M_{J'} lives in the variables outside J'.
  const std::uint32_t complement = full & ~subset;
  const int subsetSize = std::popcount(subset);
  for (std::uint32_t extra = complement;; extra = (extra - 1) & complement) {
    const std::uint32_t jprime = subset | extra;
    if (jprime != full) {
      std::vector<long> outside;
      for (int i = 0; i < d; ++i) {
        if (!(jprime & (1u << i))) outside.push_back(exponents[size_t(i)]);
      }
      BiPoly term = diagonalFaceHodge(outside).poly;
      term.addTerm(0, 0, -1);
      const int sign = (std::popcount(jprime) - subsetSize) % 2 == 0 ? 1 : -1;
      if (sign < 0) term = -term;
      inner += term;
    }
    if (extra == 0) break;
  }
  BiPoly factor = BiPoly::constant(1);
  for (int i = 0; i < subsetSize; ++i) factor *= BiPoly::qMinusOne();
  return {factor * inner, VarietyKind::Torus};
}

HodgePolynomial projectiveCone(const HodgePolynomial& h) {
  if (h.kind != VarietyKind::Projective) {
    throw DomainError(ErrorCode::MalformedInput, "projectiveCone needs a projective variety");
  }
  BiPoly result = h.poly * BiPoly::qPower(1);
  result.addTerm(0, 0, 1);
  return {result, VarietyKind::Projective};
}

}  // namespace stringy::hodge
