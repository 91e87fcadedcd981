#ifndef RATCRIT_RATIONAL_HPP
#define RATCRIT_RATIONAL_HPP

#include "ratcrit/criterion.hpp"
#include "ratcrit/expression.hpp"

#include <complex>
#include <map>
#include <vector>

namespace ratcrit {

/// n x n matrix M over CG; the represented element is the (out_row, in_col)
/// entry of M^-1.
struct LinearSystem {
  Group group;
  std::size_t n = 0;
  std::vector<GroupAlgebraElement> entries; // row-major
  std::size_t out_row = 0;
  std::size_t in_col = 0;

  const GroupAlgebraElement& at(std::size_t r, std::size_t c) const { return entries[r * n + c]; }
  GroupAlgebraElement& at(std::size_t r, std::size_t c) { return entries[r * n + c]; }
};

/// Block realization by structural recursion:
///   leaf a        -> [[1, -a], [0, 1]], entry (0, 1)
///   e1 * e2       -> [[M1, -e_i1 e_o2^T], [0, M2]], size n1 + n2
///   e1 + e2       -> two blocks fed by a shared unit variable and summed
///                    into an output variable, size n1 + n2 + 2
///   e^-1          -> [[M, -e_i], [e_o^T, 0]], size n + 1
///   c * e         -> column out_row of M scaled by c^-1
///   e^*           -> entrywise adjoint of M^T, selectors swapped
LinearSystem compile(const RationalExpression& e);

/// Solves M z = e_in degree by degree on the radius ball. Needs the constant
/// part of M invertible (SingularConstantTerm) and every non-constant term
/// supported on positive letters (NotExpandable).
GroupAlgebraElement solve_truncated(const LinearSystem& sys, int radius);

enum class ExpansionMode { Exact, Numeric };

using NumericCoefficients = std::map<ReducedWord, std::complex<double>>;

struct SeriesTruncation {
  ExpansionMode mode = ExpansionMode::Exact;
  int radius = 0;
  /// Exact mode.
  std::optional<GroupAlgebraElement> exact;
  /// Numeric mode, with ||true - coefficients||_1 <= tail_bound.
  NumericCoefficients numeric;
  double tail_bound = 0.0;
  /// l1 dominance ratio of every non-monomial inverse, in evaluation order.
  std::vector<double> dominance_ratios;
};

/// Exact graded expansion on the radius ball. Every inverse must be either of
/// c*g, or of an element whose constant term is nonzero and whose other terms
/// use positive letters only.
SeriesTruncation expand_exact(const RationalExpression& e, int radius);
/// Floating-point expansion with a certified l1 error bound <= tol. Every
/// inverse of a non-monomial needs ||c0^-1 (a - c0)||_1 < 1.
SeriesTruncation expand_numeric(const RationalExpression& e, double tol);

/// Stream for the windowed profile, served up to `radius`.
SeriesStream stream_from_expression(const RationalExpression& e, int radius);

/// Rank-1 only: a common-denominator presentation u = s^-1 a = b t^-1 with
/// a = b (numerator) and s = t (denominator) in lowest terms, denominator
/// normalized to lowest coefficient 1. Throws RankUnsupported and
/// DivisionByZeroPolynomial.
Quadruple quadruple_from_expression(const RationalExpression& e);

} // namespace ratcrit

#endif
