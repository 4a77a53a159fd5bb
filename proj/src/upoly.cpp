#include "stringy/upoly.hpp"

#include "stringy/errors.hpp"

namespace stringy::upoly {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool isZero(const Poly& p) { return p.empty(); }

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (isZero(a) || isZero(b)) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly oneMinusPower(int n) {
  Poly r(size_t(n) + 1, Rat(0));
  r[0] = 1;
  r[size_t(n)] -= 1;
  trim(r);
  return r;
}

Rat evaluate(const Poly& p, const Rat& x) {
  Rat value = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) value = value * x + *it;
  return value;
}

void divmod(const Poly& num, const Poly& div, Poly& quot, Poly& rem) {
  rem = num;
  quot.assign(num.size() >= div.size() ? num.size() - div.size() + 1 : 0, Rat(0));
  const Rat& lead = div.back();
  while (rem.size() >= div.size()) {
    const size_t shift = rem.size() - div.size();
    const Rat factor = rem.back() / lead;
    quot[shift] = factor;
    for (size_t i = 0; i < div.size(); ++i) rem[shift + i] -= factor * div[i];
    trim(rem);
    if (rem.empty()) break;
    if (rem.size() < div.size()) break;
  }
  trim(quot);
}

Poly exactDivide(const Poly& num, const Poly& div) {
  Poly quot, rem;
  divmod(num, div, quot, rem);
  if (!isZero(rem)) {
    throw DomainError(ErrorCode::NonExactDivision, "univariate division left a remainder");
  }
  return quot;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!isZero(b)) {
    Poly quot, rem;
    divmod(a, b, quot, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  if (!isZero(a)) {
    const Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace stringy::upoly
