#include "stringy/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "stringy/errors.hpp"

namespace stringy {

BiPoly BiPoly::constant(const Rat& c) { return monomial(0, 0, c); }

BiPoly BiPoly::monomial(int i, int j, const Rat& c) {
  BiPoly p;
  p.addTerm(i, j, c);
  return p;
}

BiPoly BiPoly::qPower(int m) { return monomial(m, m, 1); }

BiPoly BiPoly::qMinusOne() {
  BiPoly p = qPower(1);
  p.addTerm(0, 0, -1);
  return p;
}

Rat BiPoly::coefficient(int i, int j) const {
  const auto it = terms_.find(Exp2{i, j});
  return it == terms_.end() ? Rat(0) : it->second;
}

int BiPoly::maxSingleExponent() const {
  int m = 0;
  for (const auto& [e, c] : terms_) m = std::max({m, e.u, e.v});
  return m;
}

void BiPoly::setCoefficient(int i, int j, const Rat& c) {
  if (c == 0) {
    terms_.erase(Exp2{i, j});
  } else {
    terms_[Exp2{i, j}] = c;
  }
}

void BiPoly::addTerm(int i, int j, const Rat& c) {
  if (c == 0) return;
  const Exp2 key{i, j};
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) addTerm(e.u, e.v, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) addTerm(e.u, e.v, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly result;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      result.addTerm(ea.u + eb.u, ea.v + eb.v, ca * cb);
    }
  }
  return result;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) {
  *this = *this * other;
  return *this;
}

BiPoly& BiPoly::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly result = *this;
  for (auto& [e, c] : result.terms_) c = -c;
  return result;
}

Rat BiPoly::evaluateAtOne() const {
  Rat sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

std::vector<Rat> BiPoly::substituteDiagonal() const {
  std::vector<Rat> coeffs;
  for (const auto& [e, c] : terms_) {
    const size_t deg = size_t(e.u) + size_t(e.v);
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rat(0));
    coeffs[deg] += c;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

BiPoly BiPoly::reciprocal(int m) const {
  BiPoly result;
  for (const auto& [e, c] : terms_) result.addTerm(m - e.u, m - e.v, c);
  return result;
}

BiPoly exactDivide(const BiPoly& num, const BiPoly& div) {
  if (div.isZero()) {
    throw DomainError(ErrorCode::NonExactDivision, "division by the zero polynomial");
  }
  const auto& divLead = *div.terms().rbegin();
  BiPoly quot;
  BiPoly rem = num;
  while (!rem.isZero()) {
    const auto& remLead = *rem.terms().rbegin();
    const int di = remLead.first.u - divLead.first.u;
    const int dj = remLead.first.v - divLead.first.v;
    if (di < 0 || dj < 0) {
      throw DomainError(ErrorCode::NonExactDivision,
                        "nonzero remainder: " + to_string(rem));
    }
    const BiPoly step = BiPoly::monomial(di, dj, remLead.second / divLead.second);
    quot += step;
    rem -= step * div;
  }
  return quot;
}

namespace {

void appendMonomial(std::ostringstream& out, int i, int j) {
  if (i > 0) {
    out << "u";
    if (i > 1) out << "^" << i;
    if (j > 0) out << "*";
  }
  if (j > 0) {
    out << "v";
    if (j > 1) out << "^" << j;
  }
}

}  // namespace

std::string to_string(const BiPoly& p) {
  if (p.isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Reverse map order = (i+j, i) descending, the canonical term order.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const Rat mag = negative ? Rat(-c) : c;
    const bool isConstant = e.u == 0 && e.v == 0;
    if (mag != 1 || isConstant) {
      out << to_string(mag);
      if (!isConstant) out << "*";
    }
    appendMonomial(out, e.u, e.v);
  }
  return out.str();
}

}  // namespace stringy
