#ifndef STRINGY_NEWTON_ZETA_HPP
#define STRINGY_NEWTON_ZETA_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stringy/hodge.hpp"
#include "stringy/stringy_rational.hpp"

namespace stringy::newton {

inline constexpr int kMaxVariables = 12;

// Exponent support of a polynomial: finitely many lattice points in the
// nonnegative orthant.
struct SupportSet {
  std::vector<std::vector<long>> points;

  static SupportSet diagonal(const std::vector<long>& exponents);
  int dimension() const { return points.empty() ? 0 : int(points.front().size()); }
};

// Rational simplicial cone, strictly generated by linearly independent
// primitive vectors in the nonnegative orthant.
struct SimplicialCone {
  std::vector<std::vector<long>> generators;

  // Divides each generator by the gcd of its coordinates.
  static SimplicialCone fromGenerators(std::vector<std::vector<long>> gens);
  int dimension() const { return generators.empty() ? 0 : int(generators.front().size()); }
};

// min over support points of k . x (attained on the generating points for
// nonnegative k).
long mValue(const std::vector<long>& k, const SupportSet& support);

// All integer points with strictly positive coordinates of the form
// sum lambda_i gamma_i with 0 < lambda_i <= 1: scans the integer box bounded
// by sum gamma_i and solves for lambda by exact linear algebra. Sorted
// lexicographically. Throws DomainError(DependentGenerators) if the
// generators are linearly dependent.
std::vector<std::vector<long>> fundamentalSetEnumerate(const SimplicialCone& cone);

// Monomial q^min(i,j)-shifted u^i v^j T^t; i and j may be negative (the
// difference i - j never is affected by the diagonal q powers).
struct ZetaMonomial {
  int u = 0;
  int v = 0;
  int t = 0;
  friend auto operator<=>(const ZetaMonomial&, const ZetaMonomial&) = default;
};

// One summand: numerator over a product of factors (1 - q^a T^b). Factors
// with b = 0 are pure powers of q; they arise for cones whose generators meet
// the support at level zero.
struct ZetaTerm {
  std::map<ZetaMonomial, Rat> numerator;
  std::multiset<std::pair<long, long>> denomFactors;  // (a, b) for 1 - q^a T^b

  void addMonomial(int i, int j, int t, const Rat& c);
};

// Finite sum of ZetaTerms; carrier of the Hodge-specialized local zeta
// function.
struct ZetaExpression {
  std::vector<ZetaTerm> terms;
};

// S_Delta(f, T) = (sum_{g in G} q^{-sigma(g)} T^{m_f(g)})
//                 prod_j 1 / (1 - q^{-sigma(gamma_j)} T^{m_f(gamma_j)}),
// the Hodge specialization of the cone term, as a single ZetaTerm.
ZetaExpression sDeltaSpecialized(const SimplicialCone& cone, const SupportSet& support);

// L_tau = (q-1)^d - H(N_tau) + (q-1) H(N_tau) q^-1 T / (1 - q^-1 T),
// as a two-term ZetaExpression.
ZetaExpression lTauSpecialized(const hodge::HodgePolynomial& hN, int dim);

// Hodge-specialized local zeta function at the origin of a diagonal
// polynomial sum x_i^{a_i}: sum over proper subsets J of
// lTau(torusHodge(J)) * sDelta(cone_J), the cone of J being generated by
// alpha and the e_j, j in J.
ZetaExpression localHodgeZetaDiagonal(const std::vector<long>& exponents);

// -(1/(q(q-1))) (z (T - q))|_{T=q}: terms with no denominator factor
// vanishing at T = q contribute 0; a term with exactly one vanishing factor
// (1 - q^a T^b), a + b = 0, uses the exact limit (T-q)/(1 - q^a T^b) -> -q/b.
// Throws DomainError(HigherOrderPole) if a term has two vanishing factors.
StringyRational residueAtQ(const ZetaExpression& z);

// T := q^s. Every factor must satisfy a + s b != 0.
StringyRational substituteTAsQPower(const ZetaExpression& z, int s);

// Direct evaluation of sum over J of H(N_J) * S_Delta_J with both q and T
// replaced by uv; algebraically identical to residueAtQ of the local zeta
// function. Throws DomainError(NotCanonical) when Sigma - k < 1.
StringyRational faceSumContribution(const std::vector<long>& exponents);

std::string to_string(const ZetaExpression& z);

}  // namespace stringy::newton

#endif
