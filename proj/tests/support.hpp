// Shared helpers for the unit tests: random inputs and an elimination rank
// oracle that shares no code with the library's Bareiss routine.
#pragma once

#include "ratcrit/algebra.hpp"
#include "ratcrit/criterion.hpp"
#include "ratcrit/rank.hpp"

#include <random>

namespace testing {

using namespace ratcrit;

inline ReducedWord random_word(std::mt19937& rng, int rank, int length) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::vector<Letter> out;
  while (static_cast<int>(out.size()) < length) {
    Letter l = gen(rng) * (rng() % 2 ? 1 : -1);
    if (!out.empty() && out.back() == -l) continue;
    out.push_back(l);
  }
  return ReducedWord::from_reduced(out);
}

inline ExactComplex random_coeff(std::mt19937& rng, bool complex = true) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  mpq_class re(num(rng), den(rng));
  mpq_class im = complex && rng() % 3 == 0 ? mpq_class(num(rng), den(rng)) : mpq_class(0);
  return {re, im};
}

inline GroupAlgebraElement random_element(std::mt19937& rng, const Group& g, int radius,
                                          int terms, bool complex = true) {
  GroupAlgebraElement a(g);
  std::uniform_int_distribution<int> len(0, radius);
  for (int i = 0; i < terms; ++i) {
    a.add_term(random_word(rng, g->rank(), len(rng)), random_coeff(rng, complex));
  }
  return a;
}

/// Textbook Gaussian elimination over the Gaussian rationals.
inline std::size_t naive_rank(ExactMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      ExactComplex f = m(i, c) / m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    ++r;
  }
  return r;
}

inline ExactMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                 int sparsity = 2) {
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (static_cast<int>(rng() % sparsity) == 0) m(i, j) = random_coeff(rng);
  return m;
}

inline GroupAlgebraElement random_nonzero(std::mt19937& rng, const Group& g, int radius,
                                          int terms) {
  for (;;) {
    auto a = random_element(rng, g, radius, terms);
    if (!a.is_zero()) return a;
  }
}

/// (s m, m t, s, t) presents m and always satisfies a t = s b.
inline Quadruple random_quadruple(std::mt19937& rng, const Group& g, int radius = 1) {
  auto m = random_nonzero(rng, g, radius, 2);
  auto s = random_nonzero(rng, g, radius, 2);
  auto t = random_nonzero(rng, g, radius, 2);
  return make_quadruple(s * m, m * t, s, t);
}

/// Two quadruples with shared denominators (s, t).
inline std::pair<Quadruple, Quadruple> random_shared_pair(std::mt19937& rng, const Group& g) {
  auto s = random_nonzero(rng, g, 1, 2);
  auto t = random_nonzero(rng, g, 1, 2);
  auto m1 = random_element(rng, g, 1, 2);
  auto m2 = random_element(rng, g, 1, 2);
  return {make_quadruple(s * m1, m1 * t, s, t), make_quadruple(s * m2, m2 * t, s, t)};
}

/// u = (q, x, p, y) and v = (r, y, q, z) in chained form: with y = n z,
/// x = m y, q = p m, r = q n all identities hold.
inline std::pair<Quadruple, Quadruple> random_chain(std::mt19937& rng, const Group& g) {
  auto p = random_nonzero(rng, g, 1, 2);
  auto m = random_nonzero(rng, g, 1, 2);
  auto n = random_nonzero(rng, g, 1, 2);
  auto z = random_nonzero(rng, g, 1, 2);
  auto y = n * z, x = m * y, q = p * m, r = q * n;
  return {make_quadruple(q, x, p, y), make_quadruple(r, y, q, z)};
}

} // namespace testing
