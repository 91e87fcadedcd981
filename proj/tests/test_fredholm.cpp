#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratcrit/expression.hpp"
#include "ratcrit/fredholm.hpp"
#include "ratcrit/report_json.hpp"
#include "support.hpp"

#include <set>

using namespace ratcrit;

namespace {

const Group G1 = parse_group("F(x)");
const Group G2 = parse_group("F(x,y)");

GroupAlgebraElement e(const Group& g, const char* s) { return parse_group_algebra(g, s); }
GroupAlgebraElement one(const Group& g) { return GroupAlgebraElement::scalar(g, 1); }

ReducedWord w(const char* s) { return parse_word(*G2, s); }
Label edge(const char* base, int gen) { return EdgeOrStar(Edge{w(base), gen}); }
const Label kStar = EdgeOrStar::star();

GroupAlgebraElement monomial(const ReducedWord& g) { return GroupAlgebraElement::word(G2, g); }

} // namespace

TEST_CASE("P on basis vectors") {
  CHECK(apply_P(GVector::basis(ReducedWord{})) == EVector::basis(EdgeOrStar::star()));
  CHECK(apply_P(GVector::basis(w("x"))) == EVector::basis(EdgeOrStar(Edge{ReducedWord{}, 1})));
  CHECK(apply_P_inv(EVector::basis(EdgeOrStar::star())) == GVector::basis(ReducedWord{}));
  CHECK(apply_P_inv(EVector::basis(EdgeOrStar(Edge{ReducedWord{}, 1}))) == GVector::basis(w("x")));
}

TEST_CASE("P is unitary with inverse P^-1") {
  std::mt19937 rng(20);
  for (int k = 0; k < 100; ++k) {
    GVector v, u;
    for (int i = 0; i < 6; ++i) {
      v.add(testing::random_word(rng, 2, rng() % 5), testing::random_coeff(rng));
      u.add(testing::random_word(rng, 2, rng() % 5), testing::random_coeff(rng));
    }
    CHECK(inner(apply_P(v), apply_P(u)) == inner(v, u));
    CHECK(apply_P_inv(apply_P(v)) == v);
    EVector pv = apply_P(v);
    CHECK(apply_P(apply_P_inv(pv)) == pv);
  }
}

TEST_CASE("trivial defects vanish") {
  auto m = defect_matrix(one(G2), one(G2), one(G2), one(G2));
  CHECK(rank(m) == 0);
  CHECK(rank(defect_matrix_inv(one(G2), one(G2), one(G2), one(G2))) == 0);
  CHECK(rank(f_defect(one(G2), one(G2), one(G2), one(G2))) == 0);
}

TEST_CASE("commutator with x, written out") {
  auto x = e(G2, "x");
  auto m = defect_matrix(x, x, one(G2), one(G2));
  CHECK(m.cols == std::vector<Label>{ReducedWord{}, w("x^-1")});
  SparseMatrix expected{
      {{edge("1", 1), ReducedWord{}}, 1},
      {{kStar, w("x^-1")}, 1},
      {{edge("1", 1), w("x^-1")}, -1},
  };
  CHECK(m.sparse() == expected);
  CHECK(rank(m) == 2);
  CHECK(m.boundary_zero);
  CHECK(rank(defect_matrix_inv(x, x, one(G2), one(G2))) == 2);
  CHECK(rank(f_defect(x, x, one(G2), one(G2))) == 4);
  CHECK(rank(defect_matrix(e(G2, "x*y"), e(G2, "x*y"), one(G2), one(G2))) == 3);
}

TEST_CASE("unital convention shifts the commutator rank by one at most") {
  auto x = e(G1, "x");
  CHECK(rank(defect_matrix(x, x, one(G1), one(G1), StarConvention::Unital)) == 1);
  auto s = e(G1, "1 - 1/2*x");
  CHECK(rank(defect_matrix(one(G1), one(G1), s, s)) == 2);
  CHECK(rank(defect_matrix(one(G1), one(G1), s, s, StarConvention::Unital)) == 1);
}

TEST_CASE("commutator rank table") {
  for (const auto& g : ball(2, 4)) {
    if (g.is_identity()) continue;
    auto a = monomial(g);
    auto zero = defect_matrix(a, a, one(G2), one(G2));
    CHECK(rank(zero) == g.length() + 1);
    CHECK(rank(defect_matrix_inv(a, a, one(G2), one(G2))) == rank(zero));
    auto unital = rank(defect_matrix(a, a, one(G2), one(G2), StarConvention::Unital));
    CHECK(unital <= g.length() + 1);
    CHECK(unital + 1 >= rank(zero));
  }
}

TEST_CASE("column support is sound") {
  std::mt19937 rng(21);
  const auto window = ball(2, 4);
  for (int k = 0; k < 30; ++k) {
    // a = s m, b = m t satisfies a t = s b for any m, s, t
    auto m = testing::random_element(rng, G2, 1, 2);
    auto s = testing::random_element(rng, G2, 1, 2);
    auto t = testing::random_element(rng, G2, 1, 2);
    if (s.is_zero() || t.is_zero()) continue;
    auto a = s * m, b = m * t;
    for (auto conv : {StarConvention::Zero, StarConvention::Unital}) {
      auto support = defect_column_support(b, t);
      std::set<ReducedWord> in(support.begin(), support.end());
      for (const auto& g : window) {
        if (!in.count(g)) {
          CHECK(defect_column(a, b, s, t, g, conv).is_zero());
          CHECK(defect_inv_column(a, b, s, t, pi(g), conv).is_zero());
        }
      }
      auto fm = f_defect(a, b, s, t, conv);
      CHECK(fm.p_block.boundary_zero);
      CHECK(fm.p_inv_block.boundary_zero);
      CHECK(rank(fm) == rank(fm.p_block) + rank(fm.p_inv_block));
    }
  }
}

TEST_CASE("failing identity is caught by the boundary check") {
  // x t != s b: the defect does not have the claimed support
  auto m = defect_matrix(e(G2, "x"), one(G2), one(G2), e(G2, "y"));
  CHECK_FALSE(m.boundary_zero);
}

TEST_CASE("conjugate transpose") {
  std::mt19937 rng(22);
  for (int k = 0; k < 20; ++k) {
    auto a = testing::random_element(rng, G2, 2, 3);
    auto m = defect_matrix(a, a, one(G2), one(G2));
    auto h = m.conj_transpose();
    CHECK(rank(h) == rank(m));
    CHECK(h.rows == m.cols);
    CHECK(h.conj_transpose().sparse() == m.sparse());
  }
}

TEST_CASE("witnesses span the column space") {
  auto a = e(G2, "x*y - 1/2*y^-1 + i*x");
  auto m = defect_matrix(a, a, one(G2), one(G2));
  auto wit = m.witness_columns();
  CHECK(wit.size() == rank(m));
  for (const auto& l : wit) CHECK(std::find(m.cols.begin(), m.cols.end(), l) != m.cols.end());
}

TEST_CASE("JSON round trip of a defect matrix") {
  auto a = e(G2, "x*y - 1/3*y^-1 + 2i*x");
  auto m = defect_matrix(a, a, one(G2), one(G2));
  Json j = to_json(m);
  auto back = defect_matrix_from_json(G2, Json::parse(j.dump()));
  CHECK(back.rows == m.rows);
  CHECK(back.cols == m.cols);
  CHECK(back.entries == m.entries);
  CHECK(to_json(back).dump() == j.dump());
  for (const auto& l : m.rows) CHECK(parse_label(*G2, format_label(*G2, l)) == l);
}
