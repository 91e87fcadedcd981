// One-variable rational functions, used to read a rank-1 expression back as a
// fraction num/den of ordinary polynomials.

#include "ratcrit/errors.hpp"
#include "ratcrit/rational.hpp"

#include <algorithm>

namespace ratcrit {

namespace {

using Poly = std::vector<ExactComplex>; // coefficient of x^k at index k, no trailing zeros

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) {
    p.pop_back();
  }
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) {
    return {};
  }
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] += a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

Poly scale(const ExactComplex& c, Poly p) {
  for (auto& x : p) x = x * c;
  trim(p);
  return p;
}

Poly monomial(int k, const ExactComplex& c = 1) {
  Poly p(k + 1);
  p[k] = c;
  trim(p);
  return p;
}

// a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  Poly q;
  const ExactComplex lead_inv = b.back().inverse();
  while (!a.empty() && degree(a) >= degree(b)) {
    const int shift = degree(a) - degree(b);
    const ExactComplex c = a.back() * lead_inv;
    if (q.size() < static_cast<std::size_t>(shift + 1)) q.resize(shift + 1);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] -= c * b[i];
    }
    a.pop_back(); // leading term cancels exactly
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly reversed_conj(const Poly& p) {
  Poly r;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r.push_back(it->conj());
  trim(r);
  return r;
}

struct Fraction {
  Poly num;
  Poly den{ExactComplex(1)};
};

Fraction normalize(Fraction f) {
  if (f.den.empty()) {
    throw DivisionByZeroPolynomial("denominator vanishes identically");
  }
  if (f.num.empty()) {
    return {{}, {ExactComplex(1)}};
  }
  Poly g = gcd(f.num, f.den);
  f.num = divmod(f.num, g).first;
  f.den = divmod(f.den, g).first;
  auto low = std::find_if(f.den.begin(), f.den.end(), [](const auto& c) { return !c.is_zero(); });
  const ExactComplex c = low->inverse();
  f.num = scale(c, f.num);
  f.den = scale(c, f.den);
  return f;
}

Fraction from_element(const GroupAlgebraElement& a) {
  int lowest = 0;
  for (const auto& [w, c] : a.terms()) {
    if (!w.is_identity() && w.first() < 0) {
      lowest = std::min(lowest, -static_cast<int>(w.length()));
    }
  }
  Fraction f;
  f.den = monomial(-lowest);
  for (const auto& [w, c] : a.terms()) {
    int k = static_cast<int>(w.length());
    if (!w.is_identity() && w.first() < 0) k = -k;
    f.num = add(f.num, monomial(k - lowest, c));
  }
  return normalize(f);
}

Fraction evaluate(const RationalExpression& e) {
  switch (e.kind()) {
  case ExprKind::Leaf:
    return from_element(*e.node().leaf);
  case ExprKind::Add: {
    Fraction a = evaluate(e.lhs());
    Fraction b = evaluate(e.rhs());
    return normalize({add(mul(a.num, b.den), mul(b.num, a.den)), mul(a.den, b.den)});
  }
  case ExprKind::Mul: {
    Fraction a = evaluate(e.lhs());
    Fraction b = evaluate(e.rhs());
    return normalize({mul(a.num, b.num), mul(a.den, b.den)});
  }
  case ExprKind::Neg:
  case ExprKind::ScalarMul: {
    Fraction a = evaluate(e.lhs());
    const ExactComplex c = e.kind() == ExprKind::Neg ? ExactComplex(-1) : e.node().scalar;
    return normalize({scale(c, a.num), a.den});
  }
  case ExprKind::Inv: {
    Fraction a = evaluate(e.lhs());
    if (a.num.empty()) {
      throw DivisionByZeroPolynomial("inverse of '" + e.lhs().to_string() +
                                     "', which is the zero function");
    }
    return normalize({a.den, a.num});
  }
  case ExprKind::Adjoint: {
    // p(x)/q(x) -> conj p(1/x) / conj q(1/x) = x^(dq - dp) rev(p) / rev(q)
    Fraction a = evaluate(e.lhs());
    if (a.num.empty()) {
      return a;
    }
    const int shift = degree(a.den) - degree(a.num);
    Poly num = reversed_conj(a.num);
    Poly den = reversed_conj(a.den);
    if (shift >= 0) {
      num = mul(num, monomial(shift));
    } else {
      den = mul(den, monomial(-shift));
    }
    return normalize({num, den});
  }
  }
  throw std::logic_error("unknown expression node");
}

GroupAlgebraElement to_element(const Group& g, const Poly& p) {
  GroupAlgebraElement out(g);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!p[k].is_zero()) {
      std::vector<Letter> letters(k, 1);
      out.add_term(ReducedWord::from_reduced(letters), p[k]);
    }
  }
  return out;
}

} // namespace

Quadruple quadruple_from_expression(const RationalExpression& e) {
  const Group& g = e.group();
  if (g->rank() != 1) {
    throw RankUnsupported("common-denominator presentations are only available in rank 1 (got rank " +
                          std::to_string(g->rank()) + ")");
  }
  Fraction f = evaluate(e);
  GroupAlgebraElement num = to_element(g, f.num);
  GroupAlgebraElement den = to_element(g, f.den);
  return make_quadruple(num, num, den, den);
}

} // namespace ratcrit
