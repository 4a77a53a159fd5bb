#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "stringy/brieskorn.hpp"
#include "stringy/errors.hpp"
#include "stringy/worked_example.hpp"
#include "testers.hpp"

using namespace stringy;
using namespace stringy::brieskorn;

namespace {

Subset fromIndices(std::initializer_list<int> oneBased) {
  Subset s = 0;
  for (int i : oneBased) s |= Subset(1) << (i - 1);
  return s;
}

QPoly qPowers(std::initializer_list<long> exponents) {
  QPoly p;
  for (long e : exponents) p += QPoly::qPower(e);
  return p;
}

}  // namespace

TEST_CASE("analyze") {
  const BrieskornData big = analyze({5, 5, 6, 6, 6, 6, 6});
  CHECK(big.k == 30);
  CHECK(big.alpha == std::vector<long>{6, 6, 5, 5, 5, 5, 5});
  CHECK(big.sigma == 37);
  CHECK(big.classification == Canonicity::CanonicalSigmaMinusKAtLeast2);

  const BrieskornData a1 = analyze({2, 2, 2});
  CHECK(a1.k == 2);
  CHECK(a1.alpha == std::vector<long>{1, 1, 1});
  CHECK(a1.sigma == 3);
  CHECK(a1.classification == Canonicity::StrictlyCanonical);

  const BrieskornData cusp = analyze({2, 3});
  CHECK(cusp.k == 6);
  CHECK(cusp.alpha == std::vector<long>{3, 2});
  CHECK(cusp.sigma == 5);
  CHECK(cusp.classification == Canonicity::NotCanonical);

  CHECK_THROWS_WITH_AS(analyze({1, 2}), doctest::Contains("InvalidExponent"), DomainError);
}

TEST_CASE("computeFamilyS worked examples") {
  const SubsetFamilyS mixed = computeFamilyS({6, 6, 4, 3, 3});
  const std::vector<Subset> expected = {
      0, fromIndices({3}), fromIndices({4, 5}), fromIndices({3, 4, 5}),
      fromIndices({1, 2, 4, 5})};
  CHECK(mixed.members == expected);

  const SubsetFamilyS example = computeFamilyS({6, 6, 5, 5, 5, 5, 5});
  CHECK(example.members ==
        std::vector<Subset>{0, fromIndices({1, 2}), fromIndices({3, 4, 5, 6, 7})});

  CHECK(computeFamilyS({1, 1, 1}).members == std::vector<Subset>{0});
}

TEST_CASE("fundamentalVectors") {
  const BrieskornData data = analyze({5, 5, 6, 6, 6, 6, 6});
  const auto vectors = fundamentalVectors(data, fromIndices({1, 2}));
  REQUIRE(vectors.size() == 5);  // g_J = 5
  CHECK(vectors[0].coords == std::vector<long>{2, 2, 1, 1, 1, 1, 1});
  CHECK(vectors[0].sigmaValue == 9);
  CHECK(vectors[0].mValue == 6);

  // J = {} with g = 1: the single vector alpha.
  const auto base = fundamentalVectors(data, 0);
  REQUIRE(base.size() == 1);
  CHECK(base[0].coords == data.alpha);
  CHECK(base[0].sigmaValue == data.sigma);
  CHECK(base[0].mValue == data.k);

  const BrieskornData a1 = analyze({2, 2, 2});
  const auto shifted = fundamentalVectors(a1, fromIndices({1}));
  REQUIRE(shifted.size() == 1);
  CHECK(shifted[0].coords == std::vector<long>{2, 1, 1});
  CHECK(shifted[0].sigmaValue == 4);
  CHECK(shifted[0].mValue == 2);
}

TEST_CASE("pPolynomials worked example") {
  const BrieskornData data = analyze({5, 5, 6, 6, 6, 6, 6});
  const auto ps = pPolynomials(data);
  CHECK(ps.at(0) == QPoly::constant(1));
  CHECK(ps.at(fromIndices({1, 2})) == qPowers({6, 5, 4, 3}));
  CHECK(ps.at(fromIndices({3, 4, 5, 6, 7})) == qPowers({10, 8, 6, 4, 2}));

  const auto a1 = pPolynomials(analyze({2, 2, 2}));
  for (const auto& [subset, p] : a1) {
    if (subset == 0) {
      CHECK(p == QPoly::constant(1));
    } else {
      CHECK(p.isZero());
    }
  }
}

TEST_CASE("contribution of the A1 threefold point") {
  const StringyRational c = contribution({2, 2, 2});
  StringyRational qPlusOne;
  qPlusOne.numerator = BiPoly::qPower(1);
  qPlusOne.numerator.addTerm(0, 0, 1);
  CHECK(crossEqual(c, qPlusOne));
  CHECK(limitAtOne(c) == 2);
  CHECK_THROWS_WITH_AS(contribution({2, 3}), doctest::Contains("NotCanonical"), DomainError);
}

TEST_CASE("contribution matches the transcribed worked expressions") {
  CHECK(crossEqual(contribution({5, 5, 6, 6, 6, 6, 6}), example::contributionATranscription()));
  CHECK(crossEqual(contribution({2, 2, 6, 6, 6, 6, 6}), example::contributionBTranscription()));
}

TEST_CASE("signNormalNumerator") {
  const BrieskornData a1 = analyze({2, 2, 2});
  const BiPoly p = signNormalNumerator(contribution({2, 2, 2}), a1);
  BiPoly qPlusOne = BiPoly::qPower(1);
  qPlusOne.addTerm(0, 0, 1);
  CHECK(p == qPlusOne);

  const BrieskornData four = analyze({2, 2, 2, 2});
  CHECK_NOTHROW(signNormalNumerator(contribution({2, 2, 2, 2}), four));

  const BrieskornData big = analyze({5, 5, 6, 6, 6, 6, 6});
  const StringyRational a = contribution({5, 5, 6, 6, 6, 6, 6});
  const BiPoly pa = signNormalNumerator(a, big);
  CHECK(a.numerator == pa * BiPoly::qMinusOne());
}

TEST_CASE("random canonical tuples have nonnegative p_J exactly on S") {
  auto rng = testers::makeRng(301);
  int tested = 0;
  while (tested < 200) {
    const std::vector<long> exponents = testers::randomExponents(rng, 2, 6, 8);
    const BrieskornData data = analyze(exponents);
    if (data.sigmaMinusK() < 1) continue;
    ++tested;
    const SubsetFamilyS family = computeFamilyS(data.alpha);
    const auto ps = pPolynomials(data);
    for (const auto& [subset, p] : ps) {
      CHECK(p.allCoefficientsNonNegative());
      const bool inFamily =
          std::find(family.members.begin(), family.members.end(), subset) !=
          family.members.end();
      CHECK(p.isZero() == !inFamily);
    }
  }
}

TEST_CASE("nested subsets give a nonneg difference of fundamental sums") {
  auto rng = testers::makeRng(302);
  int tested = 0;
  while (tested < 200) {
    const std::vector<long> exponents = testers::randomExponents(rng, 2, 6, 8);
    const BrieskornData data = analyze(exponents);
    if (data.sigmaMinusK() < 1) continue;
    const int d = data.dimension();
    const Subset full = (Subset(1) << d) - 1;
    std::uniform_int_distribution<Subset> subsetDist(0, full - 1);
    const Subset big = subsetDist(rng);
    if (big == 0) continue;
    // random proper subset of big
    Subset small = big;
    while (small == big) {
      small = big & subsetDist(rng);
    }
    ++tested;
    const auto sumFor = [&](Subset subset) {
      QPoly sum;
      const long base = data.sigmaMinusK() + std::popcount(subset);
      for (const auto& fv : fundamentalVectors(data, subset)) {
        sum += QPoly::qPower(base - fv.sigmaValue + fv.mValue);
      }
      return sum;
    };
    const QPoly difference = sumFor(big) - sumFor(small);
    CHECK(difference.allCoefficientsNonNegative());
  }
}

TEST_CASE("fundamental vectors satisfy the exponent inequality") {
  auto rng = testers::makeRng(303);
  int tested = 0;
  while (tested < 200) {
    const std::vector<long> exponents = testers::randomExponents(rng, 2, 6, 8);
    const BrieskornData data = analyze(exponents);
    if (data.sigmaMinusK() < 1) continue;
    ++tested;
    const int d = data.dimension();
    const Subset full = (Subset(1) << d) - 1;
    for (Subset subset = 0; subset < full; ++subset) {
      for (const auto& fv : fundamentalVectors(data, subset)) {
        for (const long coordinate : fv.coords) CHECK(coordinate >= 1);
        CHECK(data.sigmaMinusK() + std::popcount(subset) - fv.sigmaValue + fv.mValue >= 0);
      }
    }
  }
}

TEST_CASE("strictly canonical contributions are polynomials with the sign pattern") {
  auto rng = testers::makeRng(304);
  int tested = 0;
  while (tested < 200) {
    const std::vector<long> exponents = testers::randomExponents(rng, 2, 6, 8);
    const BrieskornData data = analyze(exponents);
    if (data.sigmaMinusK() < 1) continue;
    ++tested;
    const StringyRational c = contribution(exponents);
    const BiPoly p = signNormalNumerator(c, data);  // throws on sign violations
    if (data.classification == Canonicity::StrictlyCanonical) {
      // Denominator is trivial: the contribution equals P exactly.
      CHECK(crossEqual(c, StringyRational{p}));
    }
  }
}
