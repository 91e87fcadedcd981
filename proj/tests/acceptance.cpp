// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. All comparisons are exact.

#include "ratcrit/expression.hpp"
#include "ratcrit/families.hpp"
#include "ratcrit/rational.hpp"
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace ratcrit;
using testing::random_coeff;
using testing::random_word;

namespace {

const Group G1 = parse_group("F(x)");
const Group G2 = parse_group("F(x,y)");

GroupAlgebraElement one(const Group& g) { return GroupAlgebraElement::scalar(g, 1); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

// [P, g] assembled column by column from pi alone: column b of Pg - gP is
// e_{pi(gb)} - g.e_{pi(b)}.
std::size_t commutator_rank_oracle(const ReducedWord& g) {
  std::map<EdgeOrStar, std::size_t> rows;
  std::vector<std::map<EdgeOrStar, ExactComplex>> cols;
  for (const auto& b : equivariance_failure_set(g)) {
    std::map<EdgeOrStar, ExactComplex> col;
    col[pi(multiply(g, b))] += 1;
    if (auto moved = act_edge(g, pi(b), StarConvention::Zero)) col[*moved] -= 1;
    for (const auto& [e, c] : col) rows.emplace(e, rows.size());
    cols.push_back(col);
  }
  ExactMatrix m(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [e, c] : cols[j]) m(rows[e], j) += c;
  return testing::naive_rank(m);
}

Outcome ac1(std::mt19937& rng) {
  Outcome o;
  int n = 0;
  for (; n < 200; ++n) {
    auto g = random_word(rng, 2, 1 + static_cast<int>(rng() % 5));
    auto a = GroupAlgebraElement::word(G2, g);
    auto r = rank(defect_matrix(a, a, one(G2), one(G2)));
    auto ru = rank(defect_matrix(a, a, one(G2), one(G2), StarConvention::Unital));
    const std::string name = format_word(*G2, g);
    o.require(r <= g.length() + 1 && ru <= g.length() + 1, "bound fails at " + name);
    o.require(r == g.length() + 1, "rank != |g|+1 at " + name);
    o.require(commutator_rank_oracle(g) == r, "oracle disagrees at " + name);
  }
  o.detail << n << " words, 1 <= |g| <= 5, rank = |g| + 1 (zero convention), oracle agrees";
  return o;
}

std::vector<Quadruple> tested_quadruples;

Outcome ac2(std::mt19937& rng) {
  Outcome o;
  for (int k = 0; k < 100; ++k) {
    auto q = testing::random_quadruple(rng, G2, 1);
    o.require(q.a().support_radius() <= 2 && q.b().support_radius() <= 2, "support radius > 2");
    auto r = check_criterion(q);
    o.require(r.identity_holds && r.certified, "quadruple " + std::to_string(k) + " not certified");
    tested_quadruples.push_back(q);
  }
  auto s = parse_group_algebra(G2, "1 - 1/2*x");
  auto special = make_quadruple(one(G2), one(G2), s, s);
  auto r = check_criterion(special);
  o.require(r.rank_P == 2, "rank_P of (1, 1, 1 - x/2, 1 - x/2) is " + std::to_string(r.rank_P));
  tested_quadruples.push_back(special);
  o.detail << "100 random quadruples certified; (1, 1, 1-1/2*x, 1-1/2*x) rank_P = " << r.rank_P;
  return o;
}

Outcome ac3(std::mt19937& rng) {
  Outcome o;
  const int n = 50;
  int add = 0, mult = 0, inv = 0, adj = 0;
  for (int k = 0; k < n; ++k) {
    auto [u, v] = testing::random_shared_pair(rng, G2);
    add += check_additivity(u, v, StarConvention::Zero);
    auto [p, q] = testing::random_chain(rng, G2);
    mult += check_multiplicativity(p, q, StarConvention::Zero);
    inv += check_inverse(p, StarConvention::Zero);
    // conjugate-transpose identity plus explicit rank equality
    auto a = adjoint_quadruple(p);
    bool ranks = rank(defect_matrix(p.a(), p.b(), p.s(), p.t())) ==
                 rank(defect_matrix_inv(a.a(), a.b(), a.s(), a.t()));
    adj += check_adjoint(p, StarConvention::Zero) && ranks;
    tested_quadruples.push_back(u);
    tested_quadruples.push_back(p);
  }
  o.require(add == n, "additivity");
  o.require(mult == n, "multiplicativity");
  o.require(inv == n, "inverse");
  o.require(adj == n, "adjoint");
  o.detail << "add " << add << "/" << n << ", mult(+) " << mult << "/" << n << ", inv " << inv
           << "/" << n << ", adj " << adj << "/" << n;
  return o;
}

Outcome ac4() {
  Outcome o;
  auto geo = classify(make_family(G1, "geometric:1/2"), 10, 4);
  o.require(geo.verdict == Verdict::Stabilized && geo.rank == 2, "geometric did not stabilize at 2");
  auto fact = diagonal_profile(make_family(G1, "factorial"), 12);
  for (int n = 2; n <= 12; ++n) {
    o.require(fact[n] >= static_cast<std::size_t>(n - 1), "factorial rho(N,N) < N-1 at N=" + std::to_string(n));
  }
  o.detail << "geometric:1/2 " << verdict_name(geo.verdict) << "(" << geo.rank
           << ") at window 10; factorial rho(N,N), N=2..12:";
  for (int n = 2; n <= 12; ++n) o.detail << " " << fact[n];
  return o;
}

Outcome ac5() {
  Outcome o;
  int agree = 0;
  const auto corpus = reference_corpus();
  for (const auto& spec : corpus) {
    auto u = make_family(G1, spec);
    auto profile = classify(u, 12, 4);
    auto hankel = classify_ranks(hankel_rank_profile(power_coefficients(u, 23), 12), 4);
    bool same = profile.verdict == hankel.verdict;
    agree += same;
    o.require(same, spec);
    o.detail << spec << "=" << (profile.verdict == Verdict::Stabilized ? "finite" : "infinite") << " ";
  }
  o.require(corpus.size() == 10, "corpus size");
  o.detail << "| " << agree << "/" << corpus.size() << " agree";
  return o;
}

Outcome ac6() {
  Outcome o;
  for (const auto& q : tested_quadruples) {
    for (auto conv : {StarConvention::Zero, StarConvention::Unital}) {
      auto f = f_defect(q.a(), q.b(), q.s(), q.t(), conv);
      o.require(rank(f) == rank(f.p_block) + rank(f.p_inv_block), "F-block rank");
    }
  }
  o.detail << tested_quadruples.size() << " quadruples x 2 conventions";
  return o;
}

Outcome ac7(std::mt19937& rng) {
  Outcome o;
  const int n = 200;
  for (int k = 0; k < n; ++k) {
    GVector v, w;
    for (int i = 0; i < 8; ++i) {
      v.add(random_word(rng, 2, static_cast<int>(rng() % 6)), random_coeff(rng));
      w.add(random_word(rng, 2, static_cast<int>(rng() % 6)), random_coeff(rng));
    }
    o.require(inner(apply_P(v), apply_P(w)) == inner(v, w), "inner product");
    o.require(apply_P_inv(apply_P(v)) == v, "P^-1 P");
    EVector e = apply_P(w);
    o.require(apply_P(apply_P_inv(e)) == e, "P P^-1");
  }
  o.detail << n << " random vector pairs";
  return o;
}

// Expandable by construction: leaves use positive letters and every inverse
// is of c + x_i * E with c != 0. Laurent mode allows x^-k factors on leaves.
RationalExpression random_expr(std::mt19937& rng, const Group& g, int depth, bool laurent) {
  auto leaf = [&] {
    GroupAlgebraElement a(g);
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < terms; ++i) {
      std::vector<Letter> letters;
      int len = static_cast<int>(rng() % 3);
      for (int j = 0; j < len; ++j) letters.push_back(1 + static_cast<int>(rng() % g->rank()));
      a.add_term(ReducedWord::from_reduced(letters), random_coeff(rng, !laurent));
    }
    auto e = RationalExpression::leaf(a);
    if (laurent && rng() % 3 == 0) {
      e = expr_mul(RationalExpression::leaf(GroupAlgebraElement::word(g, ReducedWord::generator(-1))), e);
    }
    return e;
  };
  if (depth == 0) return leaf();
  switch (rng() % 4) {
  case 0:
    return expr_add(random_expr(rng, g, depth - 1, laurent), random_expr(rng, g, depth - 1, laurent));
  case 1:
    return expr_mul(random_expr(rng, g, depth - 1, laurent), random_expr(rng, g, depth - 1, laurent));
  case 2: {
    ExactComplex c = random_coeff(rng, !laurent);
    if (c.is_zero()) c = 1;
    auto body = random_expr(rng, g, depth - 1, false);
    auto xi = RationalExpression::generator(g, 1 + static_cast<int>(rng() % g->rank()));
    return expr_inv(expr_add(RationalExpression::scalar(g, c), expr_mul(xi, body)));
  }
  default: {
    ExactComplex c = random_coeff(rng, !laurent);
    return expr_scale(c.is_zero() ? ExactComplex(2) : c, random_expr(rng, g, depth - 1, laurent));
  }
  }
}

Outcome ac8(std::mt19937& rng) {
  Outcome o;
  const int n = 30;
  int agree = 0, with_inverse = 0;
  for (int k = 0; k < n; ++k) {
    auto e = random_expr(rng, G2, 1 + static_cast<int>(rng() % 3), false);
    with_inverse += e.to_string().find("^-1") != std::string::npos;
    bool same = solve_truncated(compile(e), 6) == *expand_exact(e, 6).exact;
    agree += same;
    o.require(same, e.to_string());
  }
  auto all = *expand_exact(parse_expression(G2, "(1 - x - y)^-1"), 2).exact;
  bool seven = all.size() == 7;
  for (const auto& w : ball(2, 2)) {
    if (w.letters().end() != std::find_if(w.letters().begin(), w.letters().end(), [](Letter l) { return l < 0; })) continue;
    seven = seven && all.coefficient(w) == ExactComplex(1);
  }
  o.require(seven, "(1 - x - y)^-1 at radius 2");
  o.detail << agree << "/" << n << " compile+solve == expand at radius 6 (" << with_inverse
           << " with inverses); (1-x-y)^-1 radius 2 has "
           << all.size() << " words, all coefficient 1";
  return o;
}

Outcome ac9(std::mt19937& rng) {
  Outcome o;
  const int n = 20;
  const int radius = 10;
  int passed = 0, with_inverse = 0;
  for (int k = 0; k < n; ++k) {
    auto e = random_expr(rng, G1, 1 + static_cast<int>(rng() % 3), true);
    with_inverse += e.to_string().find("^-1") != std::string::npos;
    auto q = quadruple_from_expression(e);
    bool ok = q.a() * q.t() == q.s() * q.b();
    auto r = check_criterion(q);
    ok = ok && r.identity_holds && r.certified;
    // s u = a on the exponent range the expansion determines
    auto u = *expand_exact(e, radius).exact;
    std::map<long, ExactComplex> su;
    auto exponent = [](const ReducedWord& w) {
      return w.is_identity() ? 0L : static_cast<long>(w.length()) * (w.first() > 0 ? 1 : -1);
    };
    for (const auto& [ws, cs] : q.s().terms())
      for (const auto& [wu, cu] : u.terms()) su[exponent(ws) + exponent(wu)] += cs * cu;
    const long top = radius - q.s().support_radius();
    for (long m = -radius; m <= top; ++m) {
      ExactComplex lhs = su.count(m) ? su[m] : ExactComplex();
      ExactComplex rhs;
      for (const auto& [w, c] : q.a().terms())
        if (exponent(w) == m) rhs = c;
      ok = ok && lhs == rhs;
    }
    passed += ok;
    o.require(ok, e.to_string());
  }
  o.detail << passed << "/" << n << " rank-1 expressions (" << with_inverse << " with inverses): a*t = s*b, certified, s*u = a on the window";
  return o;
}

} // namespace

int main() {
  std::mt19937 rng(20240601);
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {"AC1", "commutator rank table", [&] { return ac1(rng); }},
      {"AC2", "criterion soundness on quadruples", [&] { return ac2(rng); }},
      {"AC3", "lemma identity suite", [&] { return ac3(rng); }},
      {"AC4", "profile dichotomy on <x>", [] { return ac4(); }},
      {"AC5", "oracle agreement on the 10-family corpus", [] { return ac5(); }},
      {"AC6", "F-block rank additivity", [] { return ac6(); }},
      {"AC7", "unitarity and bijection round trips", [&] { return ac7(rng); }},
      {"AC8", "expansion coherence", [&] { return ac8(rng); }},
      {"AC9", "end-to-end rank-1 pipeline", [&] { return ac9(rng); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::cout << c.id << " " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << ": "
              << o.detail.str() << " (" << std::fixed << std::setprecision(2) << secs << "s)"
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
