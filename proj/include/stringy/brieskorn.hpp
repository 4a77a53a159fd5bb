#ifndef STRINGY_BRIESKORN_HPP
#define STRINGY_BRIESKORN_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "stringy/bipoly.hpp"
#include "stringy/qpoly.hpp"
#include "stringy/stringy_rational.hpp"

namespace stringy::brieskorn {

// Subsets of the index set {1..d} are bitmasks: bit i set means index i+1.
using Subset = std::uint32_t;

// Powerset walks need all 2^d - 1 proper subsets; d is capped here.
inline constexpr int kMaxVariables = 12;

enum class Canonicity {
  NotCanonical,           // Sigma - k < 1
  StrictlyCanonical,      // Sigma - k = 1
  CanonicalSigmaMinusKAtLeast2,
};

struct BrieskornData {
  std::vector<long> exponents;  // a_1..a_d, all >= 2
  long k = 0;                   // lcm(a_i)
  std::vector<long> alpha;      // k / a_i
  long sigma = 0;               // sum of alpha
  Canonicity classification = Canonicity::NotCanonical;

  int dimension() const { return int(exponents.size()); }
  long sigmaMinusK() const { return sigma - k; }
};

struct SubsetFamilyS {
  int dimension = 0;
  std::vector<Subset> members;        // sorted by (size, value); contains {}
  std::map<Subset, long> gValues;     // g_J for every proper subset J
};

struct FundamentalVector {
  Subset subset = 0;
  long l = 0;                  // 1..g_J
  std::vector<long> coords;    // delta_J^l, strictly positive integers
  long sigmaValue = 0;         // coordinate sum
  long mValue = 0;             // k l / g_J
};

// Derives k, alpha, Sigma and the canonicity class. Throws
// DomainError(InvalidExponent) when some a_i < 2 and TooManyVariables past
// the subset cap.
BrieskornData analyze(const std::vector<long>& exponents);

// The family S of proper subsets J with g_J strictly larger than every
// gcd{alpha_j : j in {j'} u (I \ J)}, j' in J, plus the empty set. Accepts
// any positive integer vector, not only exponent-derived ones.
SubsetFamilyS computeFamilyS(const std::vector<long>& alpha);

// The g_J vectors delta_J^l = (l/g_J) alpha
//   + sum_{j in J} (g_J - (l alpha_j mod g_J))/g_J e_j,   l = 1..g_J.
std::vector<FundamentalVector> fundamentalVectors(const BrieskornData& data, Subset subset);

// The recursively defined p_J(q) for every proper subset J:
//   p_{} = 1,
//   p_J = q^{Sigma-k+|J|} sum_l q^{-sigma(delta)+m(delta)} - sum_{J' < J} p_{J'}.
// Requires a canonical singularity (Sigma - k >= 1).
std::map<Subset, QPoly> pPolynomials(const BrieskornData& data);

// Contribution of the singular point to the stringy E-function:
//   (1/(q^{Sigma-k} - 1)) sum_{J in S} (H(M_J) - 1) p_J(q),
// with H(M_J) the diagonal face polynomial on the exponents outside J.
// Throws DomainError(NotCanonical) when Sigma - k < 1.
StringyRational contribution(const std::vector<long>& exponents);

// The numerator P(u, v) with contribution = P / (q^{Sigma-k-1} + ... + 1),
// obtained by exact division of the closed-form numerator by uv - 1. Asserts the
// sign pattern (-1)^{i+j} c_{i,j} >= 0 and throws
// DomainError(SignViolation) if it fails.
BiPoly signNormalNumerator(const StringyRational& c, const BrieskornData& data);

}  // namespace stringy::brieskorn

#endif
