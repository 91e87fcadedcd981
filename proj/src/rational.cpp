#include "ratcrit/rational.hpp"

#include "ratcrit/errors.hpp"
#include "ratcrit/rank.hpp"

#include <cfloat>
#include <cmath>
#include <unordered_map>

namespace ratcrit {

namespace {

// ------------------------------------------------------------------ compile

LinearSystem empty_system(const Group& g, std::size_t n) {
  LinearSystem s;
  s.group = g;
  s.n = n;
  s.entries.assign(n * n, GroupAlgebraElement(g));
  return s;
}

void place(LinearSystem& dst, const LinearSystem& src, std::size_t offset) {
  for (std::size_t r = 0; r < src.n; ++r) {
    for (std::size_t c = 0; c < src.n; ++c) {
      dst.at(offset + r, offset + c) = src.at(r, c);
    }
  }
}

GroupAlgebraElement unit(const Group& g, const ExactComplex& c) {
  return GroupAlgebraElement::scalar(g, c);
}

LinearSystem compile_node(const RationalExpression& e) {
  const Group& g = e.group();
  switch (e.kind()) {
  case ExprKind::Leaf: {
    LinearSystem s = empty_system(g, 2);
    s.at(0, 0) = unit(g, 1);
    s.at(0, 1) = -*e.node().leaf;
    s.at(1, 1) = unit(g, 1);
    s.out_row = 0;
    s.in_col = 1;
    return s;
  }
  case ExprKind::Mul: {
    LinearSystem a = compile_node(e.lhs());
    LinearSystem b = compile_node(e.rhs());
    LinearSystem s = empty_system(g, a.n + b.n);
    place(s, a, 0);
    place(s, b, a.n);
    s.at(a.in_col, a.n + b.out_row) = unit(g, -1);
    s.out_row = a.out_row;
    s.in_col = a.n + b.in_col;
    return s;
  }
  case ExprKind::Add: {
    LinearSystem a = compile_node(e.lhs());
    LinearSystem b = compile_node(e.rhs());
    const std::size_t c = a.n + b.n;
    const std::size_t w = c + 1;
    LinearSystem s = empty_system(g, a.n + b.n + 2);
    place(s, a, 0);
    place(s, b, a.n);
    s.at(a.in_col, c) = unit(g, -1);
    s.at(a.n + b.in_col, c) = unit(g, -1);
    s.at(c, c) = unit(g, 1);
    s.at(w, w) = unit(g, 1);
    s.at(w, a.out_row) = unit(g, -1);
    s.at(w, a.n + b.out_row) = unit(g, -1);
    s.out_row = w;
    s.in_col = c;
    return s;
  }
  case ExprKind::Neg:
  case ExprKind::ScalarMul: {
    ExactComplex factor = e.kind() == ExprKind::Neg ? ExactComplex(-1) : e.node().scalar;
    if (factor.is_zero()) {
      return compile_node(RationalExpression::scalar(g, 0));
    }
    LinearSystem s = compile_node(e.lhs());
    ExactComplex inv = factor.inverse();
    for (std::size_t r = 0; r < s.n; ++r) {
      s.at(r, s.out_row) = ga_scale(inv, s.at(r, s.out_row));
    }
    return s;
  }
  case ExprKind::Inv: {
    LinearSystem a = compile_node(e.lhs());
    LinearSystem s = empty_system(g, a.n + 1);
    place(s, a, 0);
    s.at(a.in_col, a.n) = unit(g, -1);
    s.at(a.n, a.out_row) = unit(g, 1);
    s.out_row = a.n;
    s.in_col = a.n;
    return s;
  }
  case ExprKind::Adjoint: {
    LinearSystem a = compile_node(e.lhs());
    LinearSystem s = empty_system(g, a.n);
    for (std::size_t r = 0; r < a.n; ++r) {
      for (std::size_t c = 0; c < a.n; ++c) {
        s.at(c, r) = ga_adjoint(a.at(r, c));
      }
    }
    s.out_row = a.in_col;
    s.in_col = a.out_row;
    return s;
  }
  }
  throw std::logic_error("unknown expression node");
}

bool positive_letters_only(const ReducedWord& w) {
  for (Letter l : w.letters()) {
    if (l < 0) {
      return false;
    }
  }
  return true;
}

// ------------------------------------------------------------ exact expansion

class ExactExpander {
public:
  GroupAlgebraElement expand(const RationalExpression& e, int radius) {
    return value(e, radius).truncated(radius);
  }

private:
  // Exact value when the subtree denotes an element of CG.
  const std::optional<GroupAlgebraElement>& polynomial(const RationalExpression& e) {
    auto it = poly_.find(e.ptr().get());
    if (it != poly_.end()) {
      return it->second;
    }
    std::optional<GroupAlgebraElement> v;
    switch (e.kind()) {
    case ExprKind::Leaf:
      v = *e.node().leaf;
      break;
    case ExprKind::Add: {
      const auto& a = polynomial(e.lhs());
      const auto& b = polynomial(e.rhs());
      if (a && b) {
        v = *a + *b;
      }
      break;
    }
    case ExprKind::Mul: {
      const auto& a = polynomial(e.lhs());
      const auto& b = polynomial(e.rhs());
      if (a && b) {
        v = *a * *b;
      }
      break;
    }
    case ExprKind::Neg:
    case ExprKind::ScalarMul: {
      const auto& a = polynomial(e.lhs());
      if (a) {
        v = ga_scale(e.kind() == ExprKind::Neg ? ExactComplex(-1) : e.node().scalar, *a);
      }
      break;
    }
    case ExprKind::Inv: {
      const auto& a = polynomial(e.lhs());
      if (a && a->is_monomial()) {
        const auto& [w, c] = *a->terms().begin();
        v = GroupAlgebraElement::word(a->group(), invert(w), c.inverse());
      }
      break;
    }
    case ExprKind::Adjoint:
      throw std::logic_error("adjoints are eliminated before expansion");
    }
    return poly_.emplace(e.ptr().get(), std::move(v)).first->second;
  }

  // Upper bound on the number of inverse letters in any support word.
  int negative_bound(const RationalExpression& e) {
    if (const auto& p = polynomial(e)) {
      return p->max_inverse_letters();
    }
    switch (e.kind()) {
    case ExprKind::Add:
      return std::max(negative_bound(e.lhs()), negative_bound(e.rhs()));
    case ExprKind::Mul:
      return negative_bound(e.lhs()) + negative_bound(e.rhs());
    case ExprKind::Neg:
    case ExprKind::ScalarMul:
      return negative_bound(e.lhs());
    default:
      return 0; // series produced by a graded inverse
    }
  }

  // Correct on every word of length <= radius; may carry longer words.
  GroupAlgebraElement value(const RationalExpression& e, int radius) {
    if (const auto& p = polynomial(e)) {
      return *p;
    }
    switch (e.kind()) {
    case ExprKind::Add:
      return (value(e.lhs(), radius) + value(e.rhs(), radius)).truncated(radius);
    case ExprKind::Neg:
      return -value(e.lhs(), radius);
    case ExprKind::ScalarMul:
      return ga_scale(e.node().scalar, value(e.lhs(), radius));
    case ExprKind::Mul: {
      // A cancelling letter pair always contains an inverse letter, so the
      // factors are needed up to radius + 2 * (total inverse letters).
      const int slack = 2 * (negative_bound(e.lhs()) + negative_bound(e.rhs()));
      return ga_mul_truncated(value(e.lhs(), radius + slack), value(e.rhs(), radius + slack),
                              radius);
    }
    case ExprKind::Inv:
      return graded_inverse(e, radius);
    default:
      throw std::logic_error("unexpected expression node");
    }
  }

  GroupAlgebraElement graded_inverse(const RationalExpression& e, int radius) {
    const RationalExpression arg = e.lhs();
    if (!polynomial(arg) && negative_bound(arg) > 0) {
      throw NotExpandable("inverse of '" + arg.to_string() +
                          "' involves inverse letters; exact expansion needs positive letters");
    }
    GroupAlgebraElement a = value(arg, radius).truncated(radius);
    const ExactComplex c0 = trace(a);
    if (c0.is_zero()) {
      throw SingularConstantTerm("inverse of '" + arg.to_string() + "' has zero constant term");
    }
    GroupAlgebraElement rest = a - GroupAlgebraElement::scalar(a.group(), c0);
    for (const auto& [w, c] : rest.terms()) {
      if (!positive_letters_only(w)) {
        throw NotExpandable("inverse of '" + arg.to_string() + "' has the term " +
                            format_word(*a.group(), w) + " with an inverse letter");
      }
    }
    // a = c0 (1 - q) with q = -rest / c0, so a^-1 = sum q^k / c0.
    const ExactComplex inv_c0 = c0.inverse();
    GroupAlgebraElement q = ga_scale(-inv_c0, rest);
    GroupAlgebraElement one = GroupAlgebraElement::scalar(a.group(), 1);
    GroupAlgebraElement sum = one;
    for (int k = 0; k < radius; ++k) {
      sum = one + ga_mul_truncated(q, sum, radius);
    }
    return ga_scale(inv_c0, sum);
  }

  std::unordered_map<const ExprNode*, std::optional<GroupAlgebraElement>> poly_;
};

// ---------------------------------------------------------- numeric expansion

struct Approx {
  NumericCoefficients terms;
  double err = 0.0; // l1 distance to the true element
};

double l1(const NumericCoefficients& t) {
  double s = 0.0;
  for (const auto& [w, c] : t) {
    s += std::abs(c);
  }
  return s;
}

struct NumericBudget {
  double tail;  // per-inverse truncation target
  double prune; // coefficients below this magnitude are dropped
};

class NumericExpander {
public:
  explicit NumericExpander(NumericBudget budget) : budget_(budget) {}

  Approx run(const RationalExpression& e) { return eval(e); }
  std::vector<double> ratios;

private:
  // 1/c is exact in binary exactly when c is a real power of two.
  static bool exact_reciprocal(std::complex<double> c) {
    int e = 0;
    return c.imag() == 0.0 && std::abs(std::frexp(c.real(), &e)) == 0.5;
  }

  // Products are rounded; every coefficient picks up at most a few ulps of
  // the l1 mass that flows into it.
  static double rounding(double mass) { return 8.0 * DBL_EPSILON * mass; }

  Approx prune(NumericCoefficients t, double err) {
    Approx out;
    out.err = err;
    for (auto& [w, c] : t) {
      if (std::abs(c) < budget_.prune) {
        out.err += std::abs(c);
      } else {
        out.terms.emplace(w, c);
      }
    }
    return out;
  }

  Approx product(const Approx& a, const Approx& b) {
    NumericCoefficients t;
    for (const auto& [g, x] : a.terms) {
      for (const auto& [h, y] : b.terms) {
        t[multiply(g, h)] += x * y;
      }
    }
    const double na = l1(a.terms);
    const double nb = l1(b.terms);
    double err = na * b.err + a.err * nb + a.err * b.err + rounding(na * nb);
    return prune(std::move(t), err);
  }

  Approx eval(const RationalExpression& e) {
    switch (e.kind()) {
    case ExprKind::Leaf: {
      Approx out;
      for (const auto& [w, c] : e.node().leaf->terms()) {
        std::complex<double> z = c.to_complex();
        if (mpq_class(z.real()) != c.re() || mpq_class(z.imag()) != c.im()) {
          out.err += DBL_EPSILON * std::abs(z);
        }
        out.terms.emplace(w, z);
      }
      return out;
    }
    case ExprKind::Add: {
      Approx a = eval(e.lhs());
      Approx b = eval(e.rhs());
      for (const auto& [w, c] : b.terms) {
        a.terms[w] += c;
      }
      a.err += b.err + rounding(l1(a.terms));
      return a;
    }
    case ExprKind::Neg:
    case ExprKind::ScalarMul: {
      const std::complex<double> f =
          e.kind() == ExprKind::Neg ? std::complex<double>(-1.0) : e.node().scalar.to_complex();
      Approx a = eval(e.lhs());
      for (auto& [w, c] : a.terms) {
        c *= f;
      }
      a.err = a.err * std::abs(f) + rounding(l1(a.terms));
      return a;
    }
    case ExprKind::Mul:
      return product(eval(e.lhs()), eval(e.rhs()));
    case ExprKind::Adjoint: {
      Approx a = eval(e.lhs());
      Approx out;
      out.err = a.err;
      for (const auto& [w, c] : a.terms) {
        out.terms.emplace(invert(w), std::conj(c));
      }
      return out;
    }
    case ExprKind::Inv:
      return inverse(e, eval(e.lhs()));
    }
    throw std::logic_error("unknown expression node");
  }

  Approx inverse(const RationalExpression& e, const Approx& a) {
    if (a.err == 0.0 && a.terms.size() == 1) {
      const auto& [w, c] = *a.terms.begin();
      Approx out;
      out.terms.emplace(invert(w), 1.0 / c);
      out.err = exact_reciprocal(c) ? 0.0 : rounding(std::abs(1.0 / c));
      return out;
    }
    auto it = a.terms.find(ReducedWord{});
    const std::complex<double> c0 = it == a.terms.end() ? 0.0 : it->second;
    if (std::abs(c0) == 0.0) {
      throw SingularConstantTerm("inverse of '" + e.lhs().to_string() +
                                 "' has zero constant term");
    }
    NumericCoefficients q;
    for (const auto& [w, c] : a.terms) {
      if (!w.is_identity()) {
        q.emplace(w, -c / c0);
      }
    }
    const double inv_abs = 1.0 / std::abs(c0);
    const double ratio = l1(q) + a.err * inv_abs;
    ratios.push_back(ratio);
    if (ratio >= 1.0) {
      throw DominanceFailure(e.to_string(), ratio);
    }
    // Terms of sum q^k up to the first K with ratio^(K+1) / (1 - ratio) <= tail.
    Approx qa{q, rounding(l1(q))};
    Approx power{{{ReducedWord{}, 1.0}}, 0.0};
    Approx sum = power;
    double tail = ratio / (1.0 - ratio);
    while (tail > budget_.tail) {
      power = product(qa, power);
      for (const auto& [w, c] : power.terms) {
        sum.terms[w] += c;
      }
      sum.err += power.err + rounding(l1(power.terms));
      tail *= ratio;
    }
    // Error of the geometric tail plus the mismatch between the true and the
    // rounded q, which moves every power by at most k * ratio^(k-1) * delta.
    const double delta = a.err * inv_abs;
    const double gap = 1.0 - ratio;
    Approx out;
    for (const auto& [w, c] : sum.terms) {
      out.terms.emplace(w, c / c0);
    }
    out.err = inv_abs * (tail + sum.err / gap + delta / (gap * gap)) + rounding(l1(out.terms));
    return out;
  }

  NumericBudget budget_;
};

} // namespace

LinearSystem compile(const RationalExpression& e) { return compile_node(e); }

GroupAlgebraElement solve_truncated(const LinearSystem& sys, int radius) {
  const Group& g = sys.group;
  const std::size_t n = sys.n;
  ExactMatrix constant(n, n);
  std::vector<GroupAlgebraElement> rest(n * n, GroupAlgebraElement(g));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const auto& x = sys.at(r, c);
      constant(r, c) = trace(x);
      for (const auto& [w, v] : x.terms()) {
        if (w.is_identity()) {
          continue;
        }
        if (!positive_letters_only(w)) {
          throw NotExpandable("system entry " + x.to_string() + " has an inverse letter");
        }
        rest[r * n + c].add_term(w, v);
      }
    }
  }
  ExactMatrix inv0;
  try {
    inv0 = inverse(constant);
  } catch (const std::domain_error&) {
    throw SingularConstantTerm("the constant part of the system is singular");
  }
  // z = inv0 e_in - (inv0 * rest) z; each sweep fixes one more degree.
  std::vector<GroupAlgebraElement> k(n * n, GroupAlgebraElement(g));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t m = 0; m < n; ++m) {
      if (inv0(r, m).is_zero()) {
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (!rest[m * n + c].is_zero()) {
          k[r * n + c] += ga_scale(inv0(r, m), rest[m * n + c]);
        }
      }
    }
  }
  std::vector<GroupAlgebraElement> base;
  for (std::size_t r = 0; r < n; ++r) {
    base.push_back(GroupAlgebraElement::scalar(g, inv0(r, sys.in_col)));
  }
  std::vector<GroupAlgebraElement> z = base;
  for (int sweep = 0; sweep < radius; ++sweep) {
    std::vector<GroupAlgebraElement> next = base;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (!k[r * n + c].is_zero() && !z[c].is_zero()) {
          next[r] -= ga_mul_truncated(k[r * n + c], z[c], radius);
        }
      }
    }
    z = std::move(next);
  }
  return z[sys.out_row].truncated(radius);
}

SeriesTruncation expand_exact(const RationalExpression& e, int radius) {
  if (radius < 0) {
    throw std::invalid_argument("radius must be nonnegative");
  }
  ExactExpander ex;
  SeriesTruncation out;
  out.mode = ExpansionMode::Exact;
  out.radius = radius;
  out.exact = ex.expand(eliminate_adjoints(e), radius);
  return out;
}

SeriesTruncation expand_numeric(const RationalExpression& e, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  NumericBudget budget{tol / 4.0, tol * 1e-4};
  for (int attempt = 0; attempt < 24; ++attempt) {
    NumericExpander ex(budget);
    Approx a = ex.run(e);
    if (a.err <= tol) {
      SeriesTruncation out;
      out.mode = ExpansionMode::Numeric;
      for (const auto& [w, c] : a.terms) {
        out.radius = std::max(out.radius, static_cast<int>(w.length()));
      }
      out.numeric = std::move(a.terms);
      out.tail_bound = a.err;
      out.dominance_ratios = std::move(ex.ratios);
      return out;
    }
    budget.tail /= 16.0;
    budget.prune /= 16.0;
  }
  throw std::runtime_error("numeric expansion could not reach the requested tolerance");
}

SeriesStream stream_from_expression(const RationalExpression& e, int radius) {
  SeriesTruncation t = expand_exact(e, radius);
  return stream_from_truncation(*t.exact, radius, "expr:" + e.to_string());
}

} // namespace ratcrit
