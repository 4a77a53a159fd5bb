#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "stringy/errors.hpp"
#include "stringy/hodge.hpp"
#include "stringy/stringy_rational.hpp"
#include "testers.hpp"

using namespace stringy;
using namespace stringy::hodge;

namespace {

// Independent literal-sum oracle for the G numbers.
Int naiveBinomial(long n, long m) {
  if (m > n || n < 0 || m < 0) return 0;
  Int result = 1;
  for (long i = 0; i < m; ++i) result = result * (n - i) / (i + 1);
  return result;
}

Int naiveG(long kappa, long lambda, long nu, long xi) {
  Int sum = 0;
  for (long j = 0; j <= lambda; ++j) {
    const Int term = naiveBinomial(kappa + 1, j) * naiveBinomial(nu * (lambda - j) + xi, kappa);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

BiPoly goldenFermat36() {
  BiPoly h;
  h.addTerm(3, 3, 1);
  h.addTerm(2, 2, 1);
  h.addTerm(1, 1, 1);
  h.addTerm(0, 0, 1);
  h.addTerm(3, 0, -5);
  h.addTerm(0, 3, -5);
  h.addTerm(2, 1, -255);
  h.addTerm(1, 2, -255);
  return h;
}

}  // namespace

TEST_CASE("gNumber closed values and the literal-sum oracle") {
  CHECK(gNumber(1, 1, 5, 0) == 5);
  CHECK(gNumber(4, 2, 5, 1) == naiveG(4, 2, 5, 1));
  CHECK(gNumber(4, 2, 5, 1) == 255);
  // Single j = 0 term: G(kappa, 0 | nu, xi) = C(xi, kappa).
  for (long kappa = 0; kappa <= 6; ++kappa) {
    for (long xi = 0; xi <= 8; ++xi) {
      CHECK(gNumber(kappa, 0, 3, xi) == naiveBinomial(xi, kappa));
    }
  }
  for (long kappa = 0; kappa <= 5; ++kappa) {
    for (long lambda = 0; lambda <= kappa; ++lambda) {
      for (long nu = 0; nu <= 5; ++nu) {
        CHECK(gNumber(kappa, lambda, nu, 2) == naiveG(kappa, lambda, nu, 2));
      }
    }
  }
}

TEST_CASE("fermatHodge worked values") {
  CHECK(fermatHodge(3, 6).poly == goldenFermat36());
  // Dimension 0: l points in the projective line.
  for (long l = 1; l <= 9; ++l) {
    CHECK(fermatHodge(0, l).poly == BiPoly::constant(Rat(l)));
  }
  // Genus-1 plane cubic: uv + 1 - u - v.
  BiPoly cubic;
  cubic.addTerm(1, 1, 1);
  cubic.addTerm(0, 0, 1);
  cubic.addTerm(1, 0, -1);
  cubic.addTerm(0, 1, -1);
  CHECK(fermatHodge(1, 3).poly == cubic);
}

TEST_CASE("fermatHodge satisfies projective duality") {
  for (int d = 0; d <= 4; ++d) {
    for (long l = 1; l <= 6; ++l) {
      const StringyRational h{fermatHodge(d, l).poly};
      CHECK(crossEqual(h, dualTransform(h, d)));
    }
  }
}

TEST_CASE("fermatHodge quadric Euler characteristics") {
  for (int d = 1; d <= 6; ++d) {
    const Rat chi = fermatHodge(d, 2).poly.evaluateAtOne();
    CHECK(chi == (d % 2 == 0 ? d + 2 : d + 1));
  }
}

TEST_CASE("milnorDimensions") {
  WeightSystem plane{{1, 1}, 5};
  const auto dims = milnorDimensions(plane);
  // (1 + t + t^2 + t^3)^2
  CHECK(dims == std::vector<Int>{1, 2, 3, 4, 3, 2, 1});
  CHECK(dims[3] == 4);

  WeightSystem quadric{{1, 1, 1}, 2};
  CHECK(milnorDimensions(quadric) == std::vector<Int>{1});

  WeightSystem big{{6, 6, 5, 5, 5, 5, 5}, 30};
  const auto bigDims = milnorDimensions(big);
  CHECK(bigDims[23] == 20);
  CHECK(bigDims[53] == 1020);

  WeightSystem broken{{2, 3}, 4};
  CHECK_THROWS_WITH_AS(milnorDimensions(broken),
                       doctest::Contains("NonPolynomialPoincareSeries"), DomainError);
}

TEST_CASE("quasiHomHodge worked values") {
  BiPoly fiveUvMinusFour;
  fiveUvMinusFour.addTerm(1, 1, 5);
  fiveUvMinusFour.addTerm(0, 0, -4);
  CHECK(quasiHomHodge({{1, 1}, 5}).poly == fiveUvMinusFour);

  // (uv)^6 - (uv-1)(20u^4v + 20uv^4 + 1020u^3v^2 + 1020u^2v^3)
  BiPoly link;
  link.addTerm(4, 1, 20);
  link.addTerm(1, 4, 20);
  link.addTerm(3, 2, 1020);
  link.addTerm(2, 3, 1020);
  const BiPoly expected = BiPoly::qPower(6) - BiPoly::qMinusOne() * link;
  CHECK(quasiHomHodge({{6, 6, 5, 5, 5, 5, 5}, 30}).poly == expected);

  CHECK(quasiHomHodge({{1, 1, 1}, 2}).poly == BiPoly::qPower(2));
}

TEST_CASE("quasiHomHodge has an integer Euler characteristic") {
  auto rng = testers::makeRng(201);
  std::uniform_int_distribution<long> exponent(2, 7);
  std::uniform_int_distribution<int> dim(1, 5);
  int tested = 0;
  while (tested < 200) {
    std::vector<long> exponents(size_t(dim(rng)));
    for (auto& a : exponents) a = exponent(rng);
    long lcm = 1;
    for (long a : exponents) lcm = std::lcm(lcm, a);
    WeightSystem ws;
    ws.degree = lcm;
    for (long a : exponents) ws.weights.push_back(lcm / a);
    const Rat chi = quasiHomHodge(ws).poly.evaluateAtOne();
    CHECK(isInteger(chi));
    ++tested;
  }
}

TEST_CASE("diagonalFaceHodge") {
  BiPoly fiveUvMinusFour;
  fiveUvMinusFour.addTerm(1, 1, 5);
  fiveUvMinusFour.addTerm(0, 0, -4);
  CHECK(diagonalFaceHodge({5, 5}).poly == fiveUvMinusFour);
  CHECK(diagonalFaceHodge({4}).poly == BiPoly::constant(1));
  CHECK(diagonalFaceHodge({2}).poly == BiPoly::constant(1));
}

TEST_CASE("diagonalFaceHodge is the affine cone over the Fermat hypersurface") {
  // For equal exponents (l, ..., l) in d variables:
  // H = (uv-1) fermatHodge(d-2, l) + 1.
  for (int d = 2; d <= 5; ++d) {
    for (long l = 2; l <= 6; ++l) {
      const std::vector<long> exponents(size_t(d), l);
      const BiPoly cone =
          BiPoly::qMinusOne() * fermatHodge(d - 2, l).poly + BiPoly::constant(1);
      CHECK(diagonalFaceHodge(exponents).poly == cone);
    }
  }
}

TEST_CASE("torusHodge") {
  // x^2 + y^2 = 0 in the 2-torus: two punctured lines.
  BiPoly twoUvMinusTwo;
  twoUvMinusTwo.addTerm(1, 1, 2);
  twoUvMinusTwo.addTerm(0, 0, -2);
  CHECK(torusHodge({2, 2}, 0).poly == twoUvMinusTwo);

  // One variable, J = {}: H(M) - 1 = 0.
  CHECK(torusHodge({3}, 0).poly == BiPoly());

  CHECK_THROWS_AS(torusHodge({2, 2}, 0b11), DomainError);
}

TEST_CASE("projectiveCone") {
  const HodgePolynomial empty{BiPoly(), VarietyKind::Projective};
  CHECK(projectiveCone(empty).poly == BiPoly::constant(1));

  const HodgePolynomial point{BiPoly::constant(1), VarietyKind::Projective};
  BiPoly line = BiPoly::qPower(1);
  line.addTerm(0, 0, 1);
  CHECK(projectiveCone(point).poly == line);

  // Twice the cone over the sextic threefold.
  const HodgePolynomial twice = projectiveCone(projectiveCone(fermatHodge(3, 6)));
  const BiPoly expected = BiPoly::qPower(2) * goldenFermat36() + line;
  CHECK(twice.poly == expected);
}
