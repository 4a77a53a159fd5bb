#include "stringy/newton_zeta.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "stringy/errors.hpp"

namespace stringy::newton {

SupportSet SupportSet::diagonal(const std::vector<long>& exponents) {
  SupportSet s;
  const size_t d = exponents.size();
  for (size_t i = 0; i < d; ++i) {
    std::vector<long> point(d, 0);
    point[i] = exponents[i];
    s.points.push_back(std::move(point));
  }
  return s;
}

SimplicialCone SimplicialCone::fromGenerators(std::vector<std::vector<long>> gens) {
  for (auto& g : gens) {
    long common = 0;
    for (const long x : g) {
      if (x < 0) {
        throw DomainError(ErrorCode::MalformedInput, "generators must be nonnegative");
      }
      common = std::gcd(common, x);
    }
    if (common == 0) {
      throw DomainError(ErrorCode::MalformedInput, "zero generator");
    }
    for (long& x : g) x /= common;
  }
  return SimplicialCone{std::move(gens)};
}

long mValue(const std::vector<long>& k, const SupportSet& support) {
  if (support.points.empty()) {
    throw DomainError(ErrorCode::MalformedInput, "empty support");
  }
  for (const long x : k) {
    if (x < 0) throw DomainError(ErrorCode::MalformedInput, "mValue needs nonnegative k");
  }
  bool first = true;
  long best = 0;
  for (const auto& point : support.points) {
    if (point.size() != k.size()) {
      throw DomainError(ErrorCode::MalformedInput, "dimension mismatch");
    }
    long dot = 0;
    for (size_t i = 0; i < k.size(); ++i) dot += k[i] * point[i];
    if (first || dot < best) best = dot;
    first = false;
  }
  return best;
}

namespace {

// Exact solve data for lambda in G lambda = delta: integer rows W with
// positive scales s such that lambda_r = (W_r . delta) / s_r, plus integer
// consistency rows that must vanish for delta to lie in the span.
struct SolvePlan {
  std::vector<std::vector<Int>> lambdaRows;
  std::vector<Int> lambdaScales;
  std::vector<std::vector<Int>> consistencyRows;
};

SolvePlan buildSolvePlan(const SimplicialCone& cone) {
  const int e = int(cone.generators.size());
  const int d = cone.dimension();
  // Row reduce [A | I] where A has the generators as columns.
  std::vector<std::vector<Rat>> m(size_t(d), std::vector<Rat>(size_t(e + d), Rat(0)));
  for (int row = 0; row < d; ++row) {
    for (int col = 0; col < e; ++col) {
      m[size_t(row)][size_t(col)] = cone.generators[size_t(col)][size_t(row)];
    }
    m[size_t(row)][size_t(e + row)] = 1;
  }
  for (int col = 0; col < e; ++col) {
    int pivot = -1;
    for (int row = col; row < d; ++row) {
      if (m[size_t(row)][size_t(col)] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) {
      throw DomainError(ErrorCode::DependentGenerators,
                        "cone generators are linearly dependent");
    }
    std::swap(m[size_t(col)], m[size_t(pivot)]);
    const Rat lead = m[size_t(col)][size_t(col)];
    for (auto& x : m[size_t(col)]) x /= lead;
    for (int row = 0; row < d; ++row) {
      if (row == col) continue;
      const Rat factor = m[size_t(row)][size_t(col)];
      if (factor == 0) continue;
      for (int k = 0; k < e + d; ++k) {
        m[size_t(row)][size_t(k)] -= factor * m[size_t(col)][size_t(k)];
      }
    }
  }
  SolvePlan plan;
  for (int row = 0; row < d; ++row) {
    Int scale = 1;
    for (int k = 0; k < d; ++k) {
      scale = lcm(scale, Int(denominator(m[size_t(row)][size_t(e + k)])));
    }
    std::vector<Int> w(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
      const Rat scaled = m[size_t(row)][size_t(e + k)] * Rat(scale);
      w[size_t(k)] = numerator(scaled);
    }
    if (row < e) {
      plan.lambdaRows.push_back(std::move(w));
      plan.lambdaScales.push_back(scale);
    } else {
      plan.consistencyRows.push_back(std::move(w));
    }
  }
  return plan;
}

bool fitsInt64(const Int& x) {
  static const Int bound = Int(1) << 44;
  return x > -bound && x < bound;
}

}  // namespace

std::vector<std::vector<long>> fundamentalSetEnumerate(const SimplicialCone& cone) {
  const int e = int(cone.generators.size());
  const int d = cone.dimension();
  if (e == 0 || e > d) {
    throw DomainError(ErrorCode::DependentGenerators, "need 1..d generators");
  }
  for (const auto& g : cone.generators) {
    if (int(g.size()) != d) {
      throw DomainError(ErrorCode::MalformedInput, "generator dimension mismatch");
    }
  }
  const SolvePlan plan = buildSolvePlan(cone);

  std::vector<long> upper(size_t(d), 0);
  for (const auto& g : cone.generators) {
    for (int i = 0; i < d; ++i) upper[size_t(i)] += g[size_t(i)];
  }
  std::vector<std::vector<long>> result;
  if (std::any_of(upper.begin(), upper.end(), [](long x) { return x < 1; })) {
    return result;
  }
  Int boxVolume = 1;
  for (const long x : upper) boxVolume *= x;
  if (boxVolume > 2000000000) {
    throw DomainError(ErrorCode::MalformedInput,
                      "fundamental-set box has more than 2*10^9 candidate points");
  }

  // Integer fast path when every row entry and dot product stays far from
  // the int64 range; the exact rational path is the fallback.
  bool smallEnough = true;
  const long maxUpper = *std::max_element(upper.begin(), upper.end());
  for (const auto& rows : {plan.lambdaRows, plan.consistencyRows}) {
    for (const auto& row : rows) {
      for (const Int& x : row) {
        if (!fitsInt64(x * maxUpper * d)) smallEnough = false;
      }
    }
  }
  for (const Int& s : plan.lambdaScales) {
    if (!fitsInt64(s)) smallEnough = false;
  }

  std::vector<long> delta(size_t(d), 1);
  if (smallEnough) {
    std::vector<std::vector<long>> lambdaRows;
    std::vector<long> lambdaScales;
    std::vector<std::vector<long>> consistencyRows;
    for (const auto& row : plan.lambdaRows) {
      lambdaRows.emplace_back();
      for (const Int& x : row) lambdaRows.back().push_back(long(x));
    }
    for (const Int& s : plan.lambdaScales) lambdaScales.push_back(long(s));
    for (const auto& row : plan.consistencyRows) {
      consistencyRows.emplace_back();
      for (const Int& x : row) consistencyRows.back().push_back(long(x));
    }
    while (true) {
      bool ok = true;
      for (const auto& row : consistencyRows) {
        long dot = 0;
        for (int i = 0; i < d; ++i) dot += row[size_t(i)] * delta[size_t(i)];
        if (dot != 0) {
          ok = false;
          break;
        }
      }
      for (size_t r = 0; ok && r < lambdaRows.size(); ++r) {
        long dot = 0;
        for (int i = 0; i < d; ++i) dot += lambdaRows[r][size_t(i)] * delta[size_t(i)];
        if (dot <= 0 || dot > lambdaScales[r]) ok = false;
      }
      if (ok) result.push_back(delta);
      int pos = d - 1;
      while (pos >= 0 && delta[size_t(pos)] == upper[size_t(pos)]) {
        delta[size_t(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++delta[size_t(pos)];
    }
  } else {
    while (true) {
      bool ok = true;
      for (const auto& row : plan.consistencyRows) {
        Int dot = 0;
        for (int i = 0; i < d; ++i) dot += row[size_t(i)] * delta[size_t(i)];
        if (dot != 0) {
          ok = false;
          break;
        }
      }
      for (size_t r = 0; ok && r < plan.lambdaRows.size(); ++r) {
        Int dot = 0;
        for (int i = 0; i < d; ++i) dot += plan.lambdaRows[r][size_t(i)] * delta[size_t(i)];
        if (dot <= 0 || dot > plan.lambdaScales[r]) ok = false;
      }
      if (ok) result.push_back(delta);
      int pos = d - 1;
      while (pos >= 0 && delta[size_t(pos)] == upper[size_t(pos)]) {
        delta[size_t(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++delta[size_t(pos)];
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

void ZetaTerm::addMonomial(int i, int j, int t, const Rat& c) {
  if (c == 0) return;
  const ZetaMonomial key{i, j, t};
  auto [it, inserted] = numerator.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) numerator.erase(it);
  }
}

ZetaExpression sDeltaSpecialized(const SimplicialCone& cone, const SupportSet& support) {
  if (support.points.empty()) {
    throw DomainError(ErrorCode::MalformedInput, "empty support");
  }
  ZetaTerm term;
  for (const auto& g : fundamentalSetEnumerate(cone)) {
    const long sigma = std::accumulate(g.begin(), g.end(), 0L);
    const long m = mValue(g, support);
    term.addMonomial(int(-sigma), int(-sigma), int(m), 1);
  }
  for (const auto& gamma : cone.generators) {
    const long sigma = std::accumulate(gamma.begin(), gamma.end(), 0L);
    const long m = mValue(gamma, support);
    term.denomFactors.emplace(-sigma, m);
  }
  ZetaExpression z;
  z.terms.push_back(std::move(term));
  return z;
}

ZetaExpression lTauSpecialized(const hodge::HodgePolynomial& hN, int dim) {
  BiPoly qMinusOnePow = BiPoly::constant(1);
  for (int i = 0; i < dim; ++i) qMinusOnePow *= BiPoly::qMinusOne();

  ZetaTerm constant;
  const BiPoly head = qMinusOnePow - hN.poly;
  for (const auto& [e, c] : head.terms()) constant.addMonomial(e.u, e.v, 0, c);

  ZetaTerm tail;
  const BiPoly tailPoly = BiPoly::qMinusOne() * hN.poly;
  for (const auto& [e, c] : tailPoly.terms()) tail.addMonomial(e.u - 1, e.v - 1, 1, c);
  tail.denomFactors.emplace(-1, 1);

  ZetaExpression z;
  z.terms.push_back(std::move(constant));
  z.terms.push_back(std::move(tail));
  return z;
}

namespace {

ZetaTerm multiply(const ZetaTerm& a, const ZetaTerm& b) {
  ZetaTerm result;
  for (const auto& [ma, ca] : a.numerator) {
    for (const auto& [mb, cb] : b.numerator) {
      result.addMonomial(ma.u + mb.u, ma.v + mb.v, ma.t + mb.t, ca * cb);
    }
  }
  result.denomFactors = a.denomFactors;
  for (const auto& f : b.denomFactors) result.denomFactors.insert(f);
  return result;
}

struct DiagonalData {
  long k = 0;
  std::vector<long> alpha;
  long sigma = 0;
};

DiagonalData diagonalData(const std::vector<long>& exponents) {
  if (exponents.empty() || exponents.size() > kMaxVariables) {
    throw DomainError(ErrorCode::TooManyVariables,
                      "diagonal pipeline supports 1.." + std::to_string(kMaxVariables) +
                          " variables");
  }
  DiagonalData data;
  data.k = 1;
  for (const long a : exponents) {
    if (a < 2) throw DomainError(ErrorCode::InvalidExponent, "exponents must be >= 2");
    if (a > 1000000) throw DomainError(ErrorCode::InvalidExponent, "exponents exceed 10^6");
    data.k = std::lcm(data.k, a);
    if (data.k > 1000000) {
      throw DomainError(ErrorCode::InvalidExponent, "lcm of exponents exceeds 10^6");
    }
  }
  for (const long a : exponents) {
    data.alpha.push_back(data.k / a);
    data.sigma += data.k / a;
  }
  return data;
}

SimplicialCone faceCone(const DiagonalData& data, std::uint32_t subset) {
  const int d = int(data.alpha.size());
  std::vector<std::vector<long>> gens;
  gens.push_back(data.alpha);
  for (int j = 0; j < d; ++j) {
    if (subset & (std::uint32_t(1) << j)) {
      std::vector<long> basis(size_t(d), 0);
      basis[size_t(j)] = 1;
      gens.push_back(std::move(basis));
    }
  }
  return SimplicialCone::fromGenerators(std::move(gens));
}

std::vector<std::uint32_t> properSubsetsBySize(int d) {
  const std::uint32_t full = (std::uint32_t(1) << d) - 1;
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 0; s < full; ++s) subsets.push_back(s);
  std::sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
    const int sa = std::popcount(a);
    const int sb = std::popcount(b);
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return subsets;
}

// (uv)^shift * poly from a map of possibly-negative diagonal monomials.
StringyRational collectNumerator(const std::map<std::pair<int, int>, Rat>& monomials) {
  int shift = 0;
  for (const auto& [key, c] : monomials) {
    shift = std::min({shift, key.first, key.second});
  }
  StringyRational result;
  for (const auto& [key, c] : monomials) {
    result.numerator.addTerm(key.first - shift, key.second - shift, c);
  }
  result.qShift = shift;
  return result;
}

// The term's value with T := q^s, as numerator monomials plus converted
// denominator factors. Helper shared by the residue (applied to the
// non-vanishing part) and the plain substitution.
StringyRational convertTerm(const std::map<std::pair<int, int>, Rat>& monomials,
                            const std::multiset<std::pair<long, long>>& factors, int s) {
  StringyRational result = collectNumerator(monomials);
  for (const auto& [a, b] : factors) {
    const long c = a + long(s) * b;
    if (c == 0) {
      throw DomainError(ErrorCode::MalformedInput,
                        "denominator factor vanishes under T = q^" + std::to_string(s));
    }
    if (c > 0) {
      // 1/(1 - q^c) = -1/(q^c - 1)
      result.numerator = -result.numerator;
      result.denomExponents.insert(int(c));
    } else {
      // 1/(1 - q^-n) = q^n/(q^n - 1)
      result.denomExponents.insert(int(-c));
      result.qShift += int(-c);
    }
  }
  return result;
}

std::map<std::pair<int, int>, Rat> substituteT(const ZetaTerm& term, int s) {
  std::map<std::pair<int, int>, Rat> monomials;
  for (const auto& [m, c] : term.numerator) {
    const auto key = std::make_pair(m.u + s * m.t, m.v + s * m.t);
    auto [it, inserted] = monomials.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) monomials.erase(it);
    }
  }
  return monomials;
}

}  // namespace

ZetaExpression localHodgeZetaDiagonal(const std::vector<long>& exponents) {
  const DiagonalData data = diagonalData(exponents);
  const int d = int(exponents.size());
  const SupportSet support = SupportSet::diagonal(exponents);
  ZetaExpression zeta;
  for (const std::uint32_t subset : properSubsetsBySize(d)) {
    const ZetaExpression sPart = sDeltaSpecialized(faceCone(data, subset), support);
    const ZetaExpression lPart = lTauSpecialized(hodge::torusHodge(exponents, subset), d);
    for (const ZetaTerm& lTerm : lPart.terms) {
      zeta.terms.push_back(multiply(lTerm, sPart.terms.front()));
    }
  }
  return zeta;
}

StringyRational residueAtQ(const ZetaExpression& z) {
  StringyRational total;
  for (const ZetaTerm& term : z.terms) {
    if (term.numerator.empty()) continue;
    std::multiset<std::pair<long, long>> rest;
    long vanishingB = -1;
    int vanishingCount = 0;
    for (const auto& [a, b] : term.denomFactors) {
      if (a + b == 0 && b >= 1) {
        ++vanishingCount;
        vanishingB = b;
      } else {
        rest.emplace(a, b);
      }
    }
    if (vanishingCount == 0) continue;
    if (vanishingCount > 1) {
      throw DomainError(ErrorCode::HigherOrderPole,
                        "T - uv appears with multiplicity > 1");
    }
    // -(1/(q(q-1))) * numerator(T=q) * lim (T-q)/(1-q^a T^b) * rest(T=q),
    // the limit being -q/b. The two signs cancel, as do q and 1/q; what is
    // left is a factor 1/(b (q-1)).
    StringyRational part = convertTerm(substituteT(term, 1), rest, 1);
    part *= Rat(1, vanishingB);
    part.denomExponents.insert(1);
    total += part;
  }
  return total;
}

StringyRational substituteTAsQPower(const ZetaExpression& z, int s) {
  StringyRational total;
  for (const ZetaTerm& term : z.terms) {
    if (term.numerator.empty()) continue;
    total += convertTerm(substituteT(term, s), term.denomFactors, s);
  }
  return total;
}

StringyRational faceSumContribution(const std::vector<long>& exponents) {
  const DiagonalData data = diagonalData(exponents);
  if (data.sigma - data.k < 1) {
    throw DomainError(ErrorCode::NotCanonical,
                      "Sigma - k = " + std::to_string(data.sigma - data.k) +
                          " < 1: the singularity is not canonical");
  }
  const int d = int(exponents.size());
  const SupportSet support = SupportSet::diagonal(exponents);
  StringyRational total;
  for (const std::uint32_t subset : properSubsetsBySize(d)) {
    const ZetaExpression sPart = sDeltaSpecialized(faceCone(data, subset), support);
    const ZetaTerm& term = sPart.terms.front();
    if (term.numerator.empty()) continue;
    StringyRational sTilde = convertTerm(substituteT(term, 1), term.denomFactors, 1);
    sTilde *= hodge::torusHodge(exponents, subset).poly;
    total += sTilde;
  }
  return total;
}

std::string to_string(const ZetaExpression& z) {
  if (z.terms.empty()) return "0";
  std::ostringstream out;
  bool firstTerm = true;
  for (const ZetaTerm& term : z.terms) {
    if (!firstTerm) out << "\n+ ";
    firstTerm = false;
    if (term.numerator.empty()) {
      out << "0";
      continue;
    }
    out << "(";
    bool first = true;
    for (auto it = term.numerator.rbegin(); it != term.numerator.rend(); ++it) {
      const auto& [m, c] = *it;
      const bool negative = c < 0;
      if (first) {
        if (negative) out << "-";
        first = false;
      } else {
        out << (negative ? " - " : " + ");
      }
      const Rat mag = negative ? Rat(-c) : c;
      const int shift = std::min(m.u, m.v);
      const int ru = m.u - shift;
      const int rv = m.v - shift;
      std::vector<std::string> parts;
      if (shift != 0) {
        parts.push_back(shift == 1 ? "q" : "q^" + std::to_string(shift));
      }
      if (ru > 0) parts.push_back(ru == 1 ? "u" : "u^" + std::to_string(ru));
      if (rv > 0) parts.push_back(rv == 1 ? "v" : "v^" + std::to_string(rv));
      if (m.t > 0) parts.push_back(m.t == 1 ? "T" : "T^" + std::to_string(m.t));
      if (mag != 1 || parts.empty()) {
        parts.insert(parts.begin(), stringy::to_string(mag));
      }
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out << "*";
        out << parts[i];
      }
    }
    out << ")";
    for (const auto& [a, b] : term.denomFactors) {
      out << " / (1";
      out << " - ";
      std::vector<std::string> parts;
      if (a != 0) parts.push_back(a == 1 ? "q" : "q^" + std::to_string(a));
      if (b != 0) parts.push_back(b == 1 ? "T" : "T^" + std::to_string(b));
      if (parts.empty()) parts.push_back("1");
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out << "*";
        out << parts[i];
      }
      out << ")";
    }
  }
  return out.str();
}

}  // namespace stringy::newton
