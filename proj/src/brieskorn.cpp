#include "stringy/brieskorn.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "stringy/errors.hpp"
#include "stringy/hodge.hpp"

namespace stringy::brieskorn {

namespace {

void checkDimension(size_t d) {
  if (d == 0) {
    throw DomainError(ErrorCode::InvalidExponent, "need at least one exponent");
  }
  if (d > kMaxVariables) {
    throw DomainError(ErrorCode::TooManyVariables,
                      "subset enumeration is capped at " + std::to_string(kMaxVariables) +
                          " variables");
  }
}

long gcdOver(const std::vector<long>& alpha, Subset indices) {
  long g = 0;
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (indices & (Subset(1) << i)) g = std::gcd(g, alpha[i]);
  }
  return g;
}

void requireCanonical(const BrieskornData& data) {
  if (data.sigmaMinusK() < 1) {
    throw DomainError(ErrorCode::NotCanonical,
                      "Sigma - k = " + std::to_string(data.sigmaMinusK()) +
                          " < 1: the singularity is not canonical");
  }
}

}  // namespace

BrieskornData analyze(const std::vector<long>& exponents) {
  checkDimension(exponents.size());
  BrieskornData data;
  data.exponents = exponents;
  long k = 1;
  for (const long a : exponents) {
    if (a < 2) throw DomainError(ErrorCode::InvalidExponent, "exponents must be >= 2");
    if (a > 1000000) {
      throw DomainError(ErrorCode::InvalidExponent, "exponents exceed 10^6");
    }
    k = std::lcm(k, a);
    if (k > 1000000) {
      throw DomainError(ErrorCode::InvalidExponent, "lcm of exponents exceeds 10^6");
    }
  }
  data.k = k;
  for (const long a : exponents) {
    data.alpha.push_back(k / a);
    data.sigma += k / a;
  }
  const long excess = data.sigmaMinusK();
  data.classification = excess < 1    ? Canonicity::NotCanonical
                        : excess == 1 ? Canonicity::StrictlyCanonical
                                      : Canonicity::CanonicalSigmaMinusKAtLeast2;
  return data;
}

SubsetFamilyS computeFamilyS(const std::vector<long>& alpha) {
  checkDimension(alpha.size());
  for (const long a : alpha) {
    if (a < 1) throw DomainError(ErrorCode::MalformedInput, "alpha entries must be positive");
  }
  const int d = int(alpha.size());
  const Subset full = (Subset(1) << d) - 1;
  SubsetFamilyS family;
  family.dimension = d;
  for (Subset subset = 0; subset < full; ++subset) {
    const Subset complement = full & ~subset;
    const long g = gcdOver(alpha, complement);
    family.gValues[subset] = g;
    bool member = true;
    for (int j = 0; j < d && member; ++j) {
      if (!(subset & (Subset(1) << j))) continue;
      if (g <= std::gcd(g, alpha[size_t(j)])) member = false;
    }
    if (member) family.members.push_back(subset);
  }
  std::sort(family.members.begin(), family.members.end(), [](Subset a, Subset b) {
    const int sa = std::popcount(a);
    const int sb = std::popcount(b);
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return family;
}

std::vector<FundamentalVector> fundamentalVectors(const BrieskornData& data, Subset subset) {
  const int d = data.dimension();
  const Subset full = (Subset(1) << d) - 1;
  if ((subset & ~full) != 0 || subset == full) {
    throw DomainError(ErrorCode::MalformedInput, "subset must be a proper subset");
  }
  const long g = gcdOver(data.alpha, full & ~subset);
  std::vector<FundamentalVector> result;
  result.reserve(size_t(g));
  for (long l = 1; l <= g; ++l) {
    FundamentalVector fv;
    fv.subset = subset;
    fv.l = l;
    fv.coords.resize(size_t(d));
    for (int i = 0; i < d; ++i) {
      // Coordinate l alpha_i / g, with (g - (l alpha_i mod g))/g added on the
      // J coordinates; both cases collapse to floor + 1 there.
      const long numer = l * data.alpha[size_t(i)];
      if (subset & (Subset(1) << i)) {
        fv.coords[size_t(i)] = numer / g + 1;
      } else {
        fv.coords[size_t(i)] = numer / g;
      }
      fv.sigmaValue += fv.coords[size_t(i)];
    }
    fv.mValue = data.k * l / g;
    result.push_back(std::move(fv));
  }
  return result;
}

std::map<Subset, QPoly> pPolynomials(const BrieskornData& data) {
  requireCanonical(data);
  const int d = data.dimension();
  const Subset full = (Subset(1) << d) - 1;
  std::map<Subset, QPoly> result;
  // Subsets in increasing popcount order so every proper subset of J is
  // already available when J is processed.
  std::vector<Subset> order;
  order.reserve(full);
  for (Subset s = 0; s < full; ++s) order.push_back(s);
  std::sort(order.begin(), order.end(), [](Subset a, Subset b) {
    const int sa = std::popcount(a);
    const int sb = std::popcount(b);
    if (sa != sb) return sa < sb;
    return a < b;
  });
  for (const Subset subset : order) {
    QPoly p;
    const long base = data.sigmaMinusK() + std::popcount(subset);
    for (const FundamentalVector& fv : fundamentalVectors(data, subset)) {
      p += QPoly::qPower(base - fv.sigmaValue + fv.mValue);
    }
    if (subset != 0) {
      for (Subset sub = (subset - 1) & subset;; sub = (sub - 1) & subset) {
        p -= result.at(sub);
        if (sub == 0) break;
      }
    }
    result.emplace(subset, std::move(p));
  }
  return result;
}

StringyRational contribution(const std::vector<long>& exponents) {
  const BrieskornData data = analyze(exponents);
  requireCanonical(data);
  const SubsetFamilyS family = computeFamilyS(data.alpha);
  const std::map<Subset, QPoly> ps = pPolynomials(data);
  BiPoly numerator;
  for (const Subset subset : family.members) {
    std::vector<long> outside;
    for (int i = 0; i < data.dimension(); ++i) {
      if (!(subset & (Subset(1) << i))) outside.push_back(exponents[size_t(i)]);
    }
    BiPoly face = hodge::diagonalFaceHodge(outside).poly;
    face.addTerm(0, 0, -1);
    numerator += face * ps.at(subset).toBiPoly();
  }
  StringyRational result;
  result.numerator = std::move(numerator);
  result.denomExponents.insert(int(data.sigmaMinusK()));
  return result;
}

BiPoly signNormalNumerator(const StringyRational& c, const BrieskornData& data) {
  if (c.denomExponents != std::multiset<int>{int(data.sigmaMinusK())} || c.qShift != 0) {
    throw DomainError(ErrorCode::MalformedInput,
                      "expected the raw closed-form contribution for this singularity");
  }
  const BiPoly p = exactDivide(c.numerator, BiPoly::qMinusOne());
  for (const auto& [e, coeff] : p.terms()) {
    const bool evenTotal = (e.u + e.v) % 2 == 0;
    if ((evenTotal && coeff < 0) || (!evenTotal && coeff > 0)) {
      throw DomainError(ErrorCode::SignViolation,
                        "(-1)^(i+j) c_ij >= 0 fails at u^" + std::to_string(e.u) + " v^" +
                            std::to_string(e.v));
    }
  }
  return p;
}

}  // namespace stringy::brieskorn
