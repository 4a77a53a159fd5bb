#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <numeric>

#include "stringy/brieskorn.hpp"
#include "stringy/errors.hpp"
#include "stringy/newton_zeta.hpp"
#include "stringy/worked_example.hpp"
#include "testers.hpp"

using namespace stringy;
using namespace stringy::newton;

namespace {

// Fraction-free determinant over Q, the oracle for the cardinality check.
Rat determinant(std::vector<std::vector<Rat>> m) {
  const size_t n = m.size();
  Rat det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const Rat factor = m[row][col] / m[col][col];
      for (size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

SimplicialCone diagonalFaceCone(const std::vector<long>& exponents, std::uint32_t subset) {
  long k = 1;
  for (long a : exponents) k = std::lcm(k, a);
  std::vector<long> alpha;
  for (long a : exponents) alpha.push_back(k / a);
  std::vector<std::vector<long>> gens{alpha};
  for (size_t j = 0; j < exponents.size(); ++j) {
    if (subset & (std::uint32_t(1) << j)) {
      std::vector<long> e(exponents.size(), 0);
      e[j] = 1;
      gens.push_back(std::move(e));
    }
  }
  return SimplicialCone::fromGenerators(std::move(gens));
}

}  // namespace

TEST_CASE("mValue") {
  const SupportSet support = SupportSet::diagonal({5, 5, 6, 6, 6, 6, 6});
  CHECK(mValue({6, 6, 5, 5, 5, 5, 5}, support) == 30);
  CHECK(mValue({0, 1, 0, 0, 0, 0, 0}, support) == 0);
  CHECK(mValue({1, 1, 1}, SupportSet::diagonal({2, 2, 2})) == 2);
}

TEST_CASE("fundamentalSetEnumerate on worked cones") {
  const SimplicialCone single =
      SimplicialCone::fromGenerators({{6, 6, 5, 5, 5, 5, 5}});
  CHECK(fundamentalSetEnumerate(single) ==
        std::vector<std::vector<long>>{{6, 6, 5, 5, 5, 5, 5}});

  const SimplicialCone unitSquare = SimplicialCone::fromGenerators({{1, 0}, {0, 1}});
  CHECK(fundamentalSetEnumerate(unitSquare) == std::vector<std::vector<long>>{{1, 1}});

  // The cone of J = {1,2} for (5,5,6,6,6,6,6): five vectors, matching the
  // closed-form list.
  const auto points = fundamentalSetEnumerate(diagonalFaceCone({5, 5, 6, 6, 6, 6, 6}, 0b11));
  const auto data = brieskorn::analyze({5, 5, 6, 6, 6, 6, 6});
  auto closedForm = brieskorn::fundamentalVectors(data, 0b11);
  std::vector<std::vector<long>> expected;
  for (const auto& fv : closedForm) expected.push_back(fv.coords);
  std::sort(expected.begin(), expected.end());
  CHECK(points == expected);

  CHECK_THROWS_WITH_AS(
      fundamentalSetEnumerate(SimplicialCone::fromGenerators({{1, 1}, {2, 2}})),
      doctest::Contains("DependentGenerators"), DomainError);
}

TEST_CASE("enumeration equals the closed-form fundamental vectors") {
  testers::forAllTuples(2, 4, 5, [](const std::vector<long>& exponents) {
    const auto data = brieskorn::analyze(exponents);
    const std::uint32_t full = (std::uint32_t(1) << exponents.size()) - 1;
    for (std::uint32_t subset = 0; subset < full; ++subset) {
      const auto enumerated = fundamentalSetEnumerate(diagonalFaceCone(exponents, subset));
      std::vector<std::vector<long>> closedForm;
      for (const auto& fv : brieskorn::fundamentalVectors(data, subset)) {
        closedForm.push_back(fv.coords);
      }
      std::sort(closedForm.begin(), closedForm.end());
      REQUIRE(enumerated == closedForm);
    }
  });
}

TEST_CASE("full-dimensional fundamental sets have determinant cardinality") {
  auto rng = testers::makeRng(401);
  std::uniform_int_distribution<int> dim(2, 4);
  std::uniform_int_distribution<long> entry(0, 8);
  int tested = 0;
  while (tested < 200) {
    const int d = dim(rng);
    std::vector<std::vector<long>> gens(static_cast<size_t>(d), std::vector<long>(static_cast<size_t>(d)));
    for (auto& g : gens) {
      long gcd = 0;
      for (auto& x : g) {
        x = entry(rng);
        gcd = std::gcd(gcd, x);
      }
      if (gcd == 0) g[0] = 1;
    }
    std::vector<std::vector<Rat>> matrix(static_cast<size_t>(d), std::vector<Rat>(static_cast<size_t>(d)));
    SimplicialCone cone;
    try {
      cone = SimplicialCone::fromGenerators(gens);
    } catch (const DomainError&) {
      continue;  // zero rows already patched; only gcd division can throw here
    }
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) matrix[size_t(i)][size_t(j)] = cone.generators[size_t(i)][size_t(j)];
    }
    const Rat det = determinant(matrix);
    if (det == 0) {
      CHECK_THROWS_AS(fundamentalSetEnumerate(cone), DomainError);
    } else {
      const Rat magnitude = det < 0 ? Rat(-det) : det;
      CHECK(Rat(long(fundamentalSetEnumerate(cone).size())) == magnitude);
    }
    ++tested;
  }
}

TEST_CASE("sDeltaSpecialized worked cones") {
  // Cone {alpha} for (2,2,2): numerator q^-3 T^2, factor (1 - q^-3 T^2).
  const SupportSet support = SupportSet::diagonal({2, 2, 2});
  const auto z = sDeltaSpecialized(SimplicialCone::fromGenerators({{1, 1, 1}}), support);
  REQUIRE(z.terms.size() == 1);
  const ZetaTerm& term = z.terms.front();
  REQUIRE(term.numerator.size() == 1);
  const auto& [monomial, coeff] = *term.numerator.begin();
  CHECK(monomial == ZetaMonomial{-3, -3, 2});
  CHECK(coeff == 1);
  CHECK(term.denomFactors == std::multiset<std::pair<long, long>>{{-3, 2}});

  // Cone {e1, e2} for a 2-variable diagonal support: numerator
  // q^-2 T^min(a,b), and both factors are pure powers of q since
  // m_f(e_i) = 0.
  const auto degenerate = sDeltaSpecialized(
      SimplicialCone::fromGenerators({{1, 0}, {0, 1}}), SupportSet::diagonal({3, 4}));
  const ZetaTerm& dTerm = degenerate.terms.front();
  REQUIRE(dTerm.numerator.size() == 1);
  CHECK(dTerm.numerator.begin()->first == ZetaMonomial{-2, -2, 3});
  CHECK(dTerm.denomFactors == std::multiset<std::pair<long, long>>{{-1, 0}, {-1, 0}});

  // Cone of J = {1,2} for (5,5,6,6,6,6,6): factors for alpha, e1, e2.
  const auto faceTerm =
      sDeltaSpecialized(diagonalFaceCone({5, 5, 6, 6, 6, 6, 6}, 0b11),
                        SupportSet::diagonal({5, 5, 6, 6, 6, 6, 6}));
  CHECK(faceTerm.terms.front().denomFactors ==
        std::multiset<std::pair<long, long>>{{-37, 30}, {-1, 0}, {-1, 0}});
  CHECK(faceTerm.terms.front().numerator.size() == 5);
  CHECK(faceTerm.terms.front().numerator.count(ZetaMonomial{-9, -9, 6}) == 1);
}

TEST_CASE("lTauSpecialized") {
  const hodge::HodgePolynomial empty{BiPoly(), hodge::VarietyKind::Torus};
  const auto z = lTauSpecialized(empty, 3);
  REQUIRE(z.terms.size() == 2);
  // (q-1)^3 and an empty tail.
  BiPoly cube = BiPoly::qMinusOne() * BiPoly::qMinusOne() * BiPoly::qMinusOne();
  BiPoly head;
  for (const auto& [m, c] : z.terms.front().numerator) {
    CHECK(m.t == 0);
    head.addTerm(m.u, m.v, c);
  }
  CHECK(head == cube);
  CHECK(z.terms.back().numerator.empty());

  const auto line = lTauSpecialized(empty, 1);
  BiPoly qm1;
  for (const auto& [m, c] : line.terms.front().numerator) qm1.addTerm(m.u, m.v, c);
  CHECK(qm1 == BiPoly::qMinusOne());
}

TEST_CASE("residueAtQ") {
  // No vanishing factor anywhere: zero residue.
  ZetaExpression noPole;
  ZetaTerm t;
  t.addMonomial(0, 0, 2, 1);
  t.denomFactors.emplace(-3, 2);
  noPole.terms.push_back(t);
  CHECK(residueAtQ(noPole).isZero());

  // Two vanishing factors: a higher-order pole.
  ZetaExpression doublePole;
  ZetaTerm bad;
  bad.addMonomial(0, 0, 0, 1);
  bad.denomFactors.emplace(-1, 1);
  bad.denomFactors.emplace(-1, 1);
  doublePole.terms.push_back(bad);
  CHECK_THROWS_WITH_AS(residueAtQ(doublePole), doctest::Contains("HigherOrderPole"),
                       DomainError);

  // The A1 threefold: residue q + 1.
  StringyRational qPlusOne;
  qPlusOne.numerator = BiPoly::qPower(1);
  qPlusOne.numerator.addTerm(0, 0, 1);
  CHECK(crossEqual(residueAtQ(localHodgeZetaDiagonal({2, 2, 2})), qPlusOne));
}

TEST_CASE("zeta of one squared variable") {
  // x^2 in one variable resolves with a single exceptional point of
  // numerical data (1, 2), so the zeta function is
  // (q-1) q^-1 T^2 / (1 - q^-1 T^2); it has no pole at T = q.
  const ZetaExpression z = localHodgeZetaDiagonal({2});
  ZetaTerm combined;
  for (const ZetaTerm& term : z.terms) {
    if (term.numerator.empty()) continue;
    for (const auto& [m, c] : term.numerator) combined.addMonomial(m.u, m.v, m.t, c);
    for (const auto& f : term.denomFactors) combined.denomFactors.insert(f);
  }
  REQUIRE(combined.numerator.size() == 2);
  CHECK(combined.numerator.at(ZetaMonomial{0, 0, 2}) == 1);
  CHECK(combined.numerator.at(ZetaMonomial{-1, -1, 2}) == -1);
  CHECK(combined.denomFactors == std::multiset<std::pair<long, long>>{{-1, 2}});
  CHECK(residueAtQ(z).isZero());
  // Substituting T = q^2 must produce a well-formed rational function.
  CHECK_NOTHROW(substituteTAsQPower(z, 2));
}

TEST_CASE("substituteTAsQPower validates factors") {
  const ZetaExpression z = localHodgeZetaDiagonal({2, 2, 2});
  CHECK_NOTHROW(substituteTAsQPower(z, 2));
  CHECK_NOTHROW(substituteTAsQPower(z, 3));
  // (2,2,2,2) has Sigma = 2k, so T = q^2 hits the alpha factor.
  CHECK_THROWS_AS(substituteTAsQPower(localHodgeZetaDiagonal({2, 2, 2, 2}), 2), DomainError);
}

TEST_CASE("faceSumContribution worked values") {
  StringyRational qPlusOne;
  qPlusOne.numerator = BiPoly::qPower(1);
  qPlusOne.numerator.addTerm(0, 0, 1);
  CHECK(crossEqual(faceSumContribution({2, 2, 2}), qPlusOne));
  CHECK(crossEqual(faceSumContribution({2, 2, 6, 6, 6, 6, 6}),
                   example::contributionBTranscription()));
  CHECK(crossEqual(faceSumContribution({5, 5, 6, 6, 6, 6, 6}),
                   example::contributionATranscription()));
  CHECK_THROWS_WITH_AS(faceSumContribution({2, 3}), doctest::Contains("NotCanonical"),
                       DomainError);
}

TEST_CASE("the three contribution routes agree on small tuples") {
  testers::forAllTuples(2, 4, 5, [](const std::vector<long>& exponents) {
    const auto data = brieskorn::analyze(exponents);
    if (data.sigmaMinusK() < 1) return;
    const StringyRational direct = brieskorn::contribution(exponents);
    const StringyRational viaFaceSum = faceSumContribution(exponents);
    const StringyRational viaResidue = residueAtQ(localHodgeZetaDiagonal(exponents));
    REQUIRE(crossEqual(direct, viaFaceSum));
    REQUIRE(crossEqual(viaFaceSum, viaResidue));
  });
}
