#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratcrit/errors.hpp"
#include "ratcrit/freegroup.hpp"
#include "support.hpp"

#include <set>

using namespace ratcrit;

namespace {

ReducedWord w(const std::vector<Letter>& letters) { return reduce(letters); }

// Reduction by repeatedly deleting the leftmost cancelling pair, the slow way.
std::vector<Letter> slow_reduce(std::vector<Letter> v) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == -v[i + 1]) {
        v.erase(v.begin() + i, v.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  return v;
}

} // namespace

TEST_CASE("generator sets") {
  Group g = parse_group("F(x,y)");
  CHECK(g->rank() == 2);
  CHECK(g->name(1) == "x");
  CHECK(g->index_of("y") == 2);
  CHECK(parse_group("x, y, z")->rank() == 3);
  CHECK_THROWS_AS(parse_group("F()"), InvalidGenerator);
  CHECK_THROWS_AS(parse_group("F(x,x)"), InvalidGenerator);
  CHECK_THROWS_AS(parse_group("F(i)"), InvalidGenerator);
}

TEST_CASE("reduction examples") {
  CHECK(w({1, -1}).is_identity());
  CHECK(w({1, 2, -2, 1}).letters() == std::vector<Letter>{1, 1});
  CHECK(w({-2, 1, -1, 2}).is_identity());
  Group g = parse_group("F(x,y)");
  CHECK_THROWS_AS(reduce(*g, std::vector<Letter>{3}), InvalidGenerator);
  CHECK_THROWS_AS(reduce(*g, std::vector<Letter>{0}), InvalidGenerator);
}

TEST_CASE("reduction is confluent") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> letter(1, 3);
  for (int k = 0; k < 300; ++k) {
    std::vector<Letter> v;
    for (int i = 0; i < 12; ++i) v.push_back(letter(rng) * (rng() % 2 ? 1 : -1));
    CHECK(reduce(v).letters() == slow_reduce(v));
    // reducing a prefix first does not change the outcome
    std::size_t cut = rng() % v.size();
    auto head = reduce(std::span(v).first(cut)).letters();
    head.insert(head.end(), v.begin() + cut, v.end());
    CHECK(reduce(head) == reduce(v));
  }
}

TEST_CASE("group laws") {
  std::mt19937 rng(2);
  for (int k = 0; k < 200; ++k) {
    auto a = testing::random_word(rng, 2, rng() % 6);
    auto b = testing::random_word(rng, 2, rng() % 6);
    auto c = testing::random_word(rng, 2, rng() % 6);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, invert(a)).is_identity());
    CHECK(multiply(ReducedWord{}, a) == a);
    CHECK(invert(multiply(a, b)) == multiply(invert(b), invert(a)));
    CHECK(multiply(a, b).length() == a.length() + b.length() - 2 * cancellation_length(a, b));
  }
}

TEST_CASE("length-lex order") {
  Group g = parse_group("F(x,y)");
  auto p = [&](const char* s) { return parse_word(*g, s); };
  CHECK(p("1") < p("x"));
  CHECK(p("x") < p("x^-1"));
  CHECK(p("x^-1") < p("y"));
  CHECK(p("y^-1") < p("x*x"));
  auto b = ball(2, 2);
  CHECK(b.size() == 1 + 4 + 12);
  CHECK(std::is_sorted(b.begin(), b.end()));
  CHECK(ball(2, 4).size() == 161);
  CHECK(ball(1, 3).size() == 7);
}

TEST_CASE("formatting round trip") {
  Group g = parse_group("F(x,y)");
  std::mt19937 rng(3);
  for (int k = 0; k < 100; ++k) {
    auto a = testing::random_word(rng, 2, rng() % 7);
    CHECK(parse_word(*g, format_word(*g, a)) == a);
  }
  CHECK(format_word(*g, ReducedWord{}) == "1");
  CHECK(format_word(*g, w({1, -2})) == "x*y^-1");
  CHECK(parse_word(*g, "x * x^-1 * y") == w({2}));
  CHECK_THROWS_AS(parse_word(*g, "z"), ParseError);
  CHECK_THROWS_AS(parse_word(*g, ""), ParseError);
}

TEST_CASE("terminal edge bijection") {
  Group g = parse_group("F(x,y)");
  CHECK(pi(ReducedWord{}).is_star());
  CHECK(pi(w({1})) == EdgeOrStar(Edge{ReducedWord{}, 1}));
  CHECK(pi(w({-1})) == EdgeOrStar(Edge{w({-1}), 1}));
  CHECK(pi(w({1, 2})) == EdgeOrStar(Edge{w({1}), 2}));
  CHECK(format_edge(*g, pi(w({1, -2}))) == "(x*y^-1, y)");
  CHECK(format_edge(*g, EdgeOrStar::star()) == "*");

  // pi is injective on the ball and every edge inside the ball is hit once
  auto b = ball(2, 4);
  std::set<EdgeOrStar> image;
  for (const auto& x : b) {
    EdgeOrStar e = pi(x);
    CHECK(pi_inverse(e) == x);
    image.insert(e);
    if (!e.is_star()) {
      // the edge joins x to a neighbour one step closer to the identity
      const Edge& ed = e.edge();
      auto other = multiply(ed.base, ReducedWord::generator(ed.gen));
      CHECK(((ed.base == x && other.length() + 1 == x.length()) ||
             (other == x && ed.base.length() + 1 == x.length())));
    }
  }
  CHECK(image.size() == b.size());
}

TEST_CASE("equivariance failure sets") {
  Group g = parse_group("F(x,y)");
  auto f = equivariance_failure_set(w({1, 2}));
  CHECK(f == std::vector<ReducedWord>{ReducedWord{}, w({-2}), w({-2, -1})});

  std::mt19937 rng(4);
  auto b = ball(2, 4);
  for (int k = 0; k < 40; ++k) {
    auto x = testing::random_word(rng, 2, 1 + rng() % 4);
    auto fail = equivariance_failure_set(x);
    CHECK(fail.size() == x.length() + 1);
    std::set<ReducedWord> fs(fail.begin(), fail.end());
    for (const auto& y : b) {
      auto moved = act_edge(x, pi(y));
      bool equivariant = moved && *moved == pi(multiply(x, y));
      // outside F_x the action commutes with pi; inside it does not
      CHECK(equivariant == (fs.count(y) == 0));
    }
  }
}

TEST_CASE("star conventions on the extra point") {
  auto x = w({1});
  CHECK(!act_edge(x, EdgeOrStar::star(), StarConvention::Zero));
  CHECK(act_edge(ReducedWord{}, EdgeOrStar::star(), StarConvention::Zero)->is_star());
  CHECK(act_edge(x, EdgeOrStar::star(), StarConvention::Unital)->is_star());
}

TEST_CASE("neighbours") {
  auto n = neighbours(w({1}), 2);
  CHECK(n.size() == 4);
  CHECK(std::find(n.begin(), n.end(), ReducedWord{}) != n.end());
}
