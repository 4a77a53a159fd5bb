#include "stringy/worked_example.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "stringy/brieskorn.hpp"
#include "stringy/hodge.hpp"

namespace stringy::example {

namespace {

// H of the 3-dimensional degree-6 Fermat hypersurface, written out; every
// building block below is a combination of this polynomial and projective
// spaces.
BiPoly fermatSexticThreefold() {
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

BiPoly projectiveSpace(int n) {
  BiPoly h;
  for (int i = 0; i <= n; ++i) h.addTerm(i, i, 1);
  return h;
}

BiPoly diagonal(std::initializer_list<Rat> coeffs) {
  // coefficient list for (uv)^0, (uv)^1, ...
  BiPoly p;
  int power = 0;
  for (const Rat& c : coeffs) {
    p.addTerm(power, power, c);
    ++power;
  }
  return p;
}

void addSymmetricPair(BiPoly& p, int i, int j, const Rat& c) {
  p.addTerm(i, j, c);
  p.addTerm(j, i, c);
}

// Mobius inversion of closed strata: H(D_J°) = sum over present supersets J'
// of J of (-1)^{|J'|-|J|} H(D_{J'}).
std::map<std::vector<std::string>, BiPoly> openFromClosed(
    const std::map<std::vector<std::string>, BiPoly>& closed) {
  std::map<std::vector<std::string>, BiPoly> open;
  for (const auto& [subset, h] : closed) {
    BiPoly sum;
    for (const auto& [other, hPrime] : closed) {
      if (other.size() < subset.size()) continue;
      if (!std::includes(other.begin(), other.end(), subset.begin(), subset.end())) continue;
      if ((other.size() - subset.size()) % 2 == 0) {
        sum += hPrime;
      } else {
        sum -= hPrime;
      }
    }
    if (!sum.isZero()) open.emplace(subset, std::move(sum));
  }
  return open;
}

std::vector<std::string> ids(std::initializer_list<std::string> list) {
  std::vector<std::string> v(list);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

StringyRational contributionATranscription() {
  BiPoly body = diagonal({1, 1, 6, 2, 8, 4, 9, 3, 7, 1, 5});
  addSymmetricPair(body, 9, 6, -5);
  addSymmetricPair(body, 8, 5, -5);
  addSymmetricPair(body, 7, 4, -5);
  addSymmetricPair(body, 6, 3, -5);
  addSymmetricPair(body, 8, 7, -255);
  addSymmetricPair(body, 7, 6, -255);
  addSymmetricPair(body, 6, 5, -255);
  addSymmetricPair(body, 5, 4, -255);
  addSymmetricPair(body, 4, 1, -20);
  addSymmetricPair(body, 3, 2, -1020);
  StringyRational a;
  a.numerator = BiPoly::qMinusOne() * body;
  a.denomExponents.insert(7);
  return a;
}

StringyRational contributionBTranscription() {
  BiPoly body = diagonal({1, 1, 1, 1, 1, 5});
  addSymmetricPair(body, 4, 1, -5);
  addSymmetricPair(body, 3, 2, -255);
  StringyRational b;
  b.numerator = BiPoly::qMinusOne() * body;
  b.denomExponents.insert(5);
  return b;
}

StringyRational stringyETranscription() {
  BiPoly n = diagonal({1, 1, 6, -3, 7, 21, -20, -12, 6, -14, 6, -12, -20, 21, 7, -3, 6, 1, 1});
  addSymmetricPair(n, 17, 14, -25);
  addSymmetricPair(n, 4, 1, -25);
  addSymmetricPair(n, 16, 15, -1275);
  addSymmetricPair(n, 3, 2, -1275);
  addSymmetricPair(n, 16, 13, 20);
  addSymmetricPair(n, 5, 2, 20);
  addSymmetricPair(n, 15, 14, 1020);
  addSymmetricPair(n, 4, 3, 1020);
  addSymmetricPair(n, 15, 12, -5);
  addSymmetricPair(n, 6, 3, -5);
  addSymmetricPair(n, 14, 13, -255);
  addSymmetricPair(n, 5, 4, -255);
  addSymmetricPair(n, 11, 8, 10);
  addSymmetricPair(n, 10, 7, 10);
  addSymmetricPair(n, 10, 9, 510);
  addSymmetricPair(n, 9, 8, 510);
  StringyRational e;
  e.numerator = std::move(n);
  e.denomExponents.insert(5);
  e.denomExponents.insert(7);
  return e;
}

resolution::ResolutionData infinityChainData() {
  // One blow-up of the point, one of the new singular curve, one of the
  // remaining intersection: a chain D1 - E1 - F - E2 - D2, every discrepancy
  // 4. D1, D2 are P^5, E1, E2 are P^1-bundles over P^4, all intersections
  // are P^4.
  const BiPoly y = fermatSexticThreefold();
  resolution::ResolutionData r;
  r.dimension = 6;
  r.mode = resolution::Mode::ExceptionalFiberOnly;
  for (const char* id : {"D1", "E1", "F", "E2", "D2"}) {
    r.components.push_back({id, Rat(4)});
  }
  std::map<std::vector<std::string>, BiPoly> closed;
  closed[ids({"D1"})] = projectiveSpace(5);
  closed[ids({"D2"})] = projectiveSpace(5);
  closed[ids({"E1"})] = projectiveSpace(1) * projectiveSpace(4);
  closed[ids({"E2"})] = projectiveSpace(1) * projectiveSpace(4);
  closed[ids({"F"})] = diagonal({1, 2, 2, 2, 2, 1}) + BiPoly::qPower(1) * y;
  closed[ids({"D1", "E1"})] = projectiveSpace(4);
  closed[ids({"E1", "F"})] = projectiveSpace(4);
  closed[ids({"E2", "F"})] = projectiveSpace(4);
  closed[ids({"D2", "E2"})] = projectiveSpace(4);
  r.openStrata = openFromClosed(closed);
  return r;
}

resolution::ResolutionData bigDiagramData() {
  // Five blow-ups resolve the (5,5,6,6,6,6,6) point: components D1..D5
  // (discrepancy 1), E1, E2, F1, F2, G1..G5 and C, with twenty threefold and
  // thirty-four twofold intersections.
  const BiPoly y = fermatSexticThreefold();
  resolution::ResolutionData r;
  r.dimension = 6;
  r.mode = resolution::Mode::ExceptionalFiberOnly;
  r.components.push_back({"C", Rat(6)});
  for (const char* id : {"D1", "D2", "D3", "D4", "D5"}) r.components.push_back({id, Rat(1)});
  r.components.push_back({"E1", Rat(5)});
  r.components.push_back({"E2", Rat(2)});
  r.components.push_back({"F1", Rat(4)});
  r.components.push_back({"F2", Rat(3)});
  for (const char* id : {"G1", "G2", "G3", "G4", "G5"}) r.components.push_back({id, Rat(5)});

  std::map<std::vector<std::string>, BiPoly> closed;
  closed[ids({"C"})] = projectiveSpace(1) * projectiveSpace(4);
  closed[ids({"E1"})] = diagonal({1, 2, 1}) * y;
  closed[ids({"E2"})] = diagonal({1, 1, 1}) * y;
  closed[ids({"F1"})] = diagonal({1, 7, 1}) * y;
  closed[ids({"F2"})] = diagonal({1, 7, 1}) * y;
  const std::vector<std::string> dNames = {"D1", "D2", "D3", "D4", "D5"};
  const std::vector<std::string> gNames = {"G1", "G2", "G3", "G4", "G5"};
  const BiPoly pairHodge = projectiveSpace(1) * y;
  for (size_t i = 0; i < 5; ++i) {
    const std::string& di = dNames[i];
    const std::string& gi = gNames[i];
    closed[ids({di})] = projectiveSpace(5) + Rat(3) * BiPoly::qPower(1) * y;
    closed[ids({gi})] = diagonal({1, 2, 1}) * y;
    closed[ids({"C", di})] = projectiveSpace(4);
    closed[ids({"E1", di})] = pairHodge;
    closed[ids({"F1", di})] = pairHodge;
    closed[ids({di, gi})] = pairHodge;
    closed[ids({"F1", gi})] = pairHodge;
    closed[ids({"F2", gi})] = pairHodge;
    closed[ids({"C", "E1", di})] = y;
    closed[ids({"E1", "F1", di})] = y;
    closed[ids({"F1", di, gi})] = y;
    closed[ids({"F1", "F2", gi})] = y;
  }
  closed[ids({"C", "E1"})] = pairHodge;
  closed[ids({"E1", "F1"})] = pairHodge;
  closed[ids({"F1", "F2"})] = pairHodge;
  closed[ids({"E2", "F2"})] = pairHodge;
  r.openStrata = openFromClosed(closed);
  return r;
}

Assembly assemble() {
  Assembly result;
  result.contributionA = brieskorn::contribution({5, 5, 6, 6, 6, 6, 6});
  result.contributionB = brieskorn::contribution({2, 2, 6, 6, 6, 6, 6});

  // Part at infinity: the double projective cone over the sextic Fermat
  // threefold, minus its five singular points.
  hodge::HodgePolynomial cone =
      hodge::projectiveCone(hodge::projectiveCone(hodge::fermatHodge(3, 6)));
  result.smoothInfinity = cone.poly;
  result.smoothInfinity.addTerm(0, 0, -5);

  // Affine chart minus its singular point.
  result.smoothAffine = hodge::diagonalFaceHodge({5, 5, 6, 6, 6, 6, 6}).poly;
  result.smoothAffine.addTerm(0, 0, -1);

  result.total = result.contributionA;
  StringyRational fiveB = result.contributionB;
  fiveB *= Rat(5);
  result.total += fiveB;
  result.total += StringyRational(result.smoothInfinity);
  result.total += StringyRational(result.smoothAffine);
  return result;
}

}  // namespace stringy::example
