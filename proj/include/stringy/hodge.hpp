#ifndef STRINGY_HODGE_HPP
#define STRINGY_HODGE_HPP

#include <cstdint>
#include <vector>

#include "stringy/bipoly.hpp"
#include "stringy/rational.hpp"

namespace stringy::hodge {

// Weighted-homogeneity data of a polynomial in r+1 variables: positive
// integer weights w_1..w_{r+1} and a degree D with every w_i < D.
struct WeightSystem {
  std::vector<long> weights;
  long degree = 0;
};

enum class VarietyKind { Affine, Projective, Torus };

struct HodgePolynomial {
  BiPoly poly;
  VarietyKind kind = VarietyKind::Affine;
};

// G(kappa, lambda | nu, xi) = sum_{j=0}^{lambda} (-1)^j C(kappa+1, j)
// C(nu(lambda-j)+xi, kappa), with C(n, m) = 0 for m > n or n < 0.
// Requires kappa >= lambda.
Int gNumber(long kappa, long lambda, long nu, long xi);

// Hodge-Deligne polynomial of the d-dimensional degree-l hypersurface
// x_0^l + ... + x_{d+1}^l = 0 in projective (d+1)-space:
//   sum_{p=0}^{d} u^p (v^p + (-1)^d G(d+1, p+1 | l-1, p) v^{d-p}).
HodgePolynomial fermatHodge(int dim, long degree);

// Graded dimensions of the Milnor algebra of a quasi-homogeneous polynomial
// with the given weight system, read off the Poincare series
//   prod(1 - t^{D-w_i}) / prod(1 - t^{w_i}),
// computed by exact division. Throws
// DomainError(NonPolynomialPoincareSeries) when the division is not exact.
std::vector<Int> milnorDimensions(const WeightSystem& ws);

// Hodge-Deligne polynomial of the zero set of an isolated quasi-homogeneous
// singularity in r+1 variables:
//   (uv)^r + (-1)^{r-1} (uv - 1) sum_{p=0}^{r-1} h^{p,r-1-p} u^p v^{r-1-p}
// with h^{p,r-1-p} = dim M(f)_{(p+1)D - sum(w_i)} (zero when the index is
// negative or beyond the top degree).
HodgePolynomial quasiHomHodge(const WeightSystem& ws);

// Hodge-Deligne polynomial of { sum x_i^{a_i} = 0 } in affine space, via
// quasiHomHodge with weights lcm/a_i and degree lcm. A single exponent gives
// the constant 1 (the zero set is one point).
HodgePolynomial diagonalFaceHodge(const std::vector<long>& exponents);

// Hodge-Deligne polynomial of the diagonal hypersurface inside the full
// d-torus, for the face determined by a proper subset J (bit i set = index
// i+1 in J):
//   H(N_J) = (uv-1)^{|J|} sum_{I != J' >= J} (-1)^{|J'|-|J|} (H(M_{J'}) - 1),
// where M_{J'} uses the exponents outside J'.
HodgePolynomial torusHodge(const std::vector<long>& exponents, std::uint32_t subset);

// uv * h + 1.
HodgePolynomial projectiveCone(const HodgePolynomial& h);

}  // namespace stringy::hodge

#endif
