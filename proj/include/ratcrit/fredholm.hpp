#ifndef RATCRIT_FREDHOLM_HPP
#define RATCRIT_FREDHOLM_HPP

#include "ratcrit/algebra.hpp"
#include "ratcrit/rank.hpp"

#include <map>
#include <utility>
#include <variant>
#include <vector>

namespace ratcrit {

/// Basis label of L^2(G) (a word) or of L^2(E) + C (an edge or *).
using Label = std::variant<ReducedWord, EdgeOrStar>;

std::string format_label(const GeneratorSet& gens, const Label& l);
/// Inverse of format_label: "*" and "(h, x)" are edges, anything else a word.
Label parse_label(const GeneratorSet& gens, const std::string& text);

using SparseMatrix = std::map<std::pair<Label, Label>, ExactComplex>;

/// Exact finite matrix of a defect operator with labelled rows and columns.
/// Columns are the basis vectors on which the operator can be nonzero; rows
/// are exactly the labels hit by some column.
struct DefectMatrix {
  Group group;
  std::vector<Label> rows;
  std::vector<Label> cols;
  ExactMatrix entries;
  /// Cayley-graph neighbours of the column set, checked to map to zero.
  std::vector<Label> boundary;
  bool boundary_zero = true;

  /// (row, col) -> value, nonzero entries only; independent of label order.
  SparseMatrix sparse() const;
  /// Conjugate transpose with row and column labels exchanged.
  DefectMatrix conj_transpose() const;
  RankResult rank_result() const { return rank_with_pivots(entries); }
  /// Labels of the pivot columns of the rank computation.
  std::vector<Label> witness_columns() const;
};

std::size_t rank(const DefectMatrix& m);

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator-(const SparseMatrix& a);

/// The block operator sFb - aFt = (0, sP^-1 b - aP^-1 t; sPb - aPt, 0).
struct FBlockMatrix {
  DefectMatrix p_block;
  DefectMatrix p_inv_block;

  /// Both blocks laid out in one matrix on L^2(G) + L^2(E) + C.
  DefectMatrix assembled() const;
};

std::size_t rank(const FBlockMatrix& f);

/// basis(g) -> basis(pi(g))
EVector apply_P(const GVector& v);
/// basis(e) -> basis(pi^-1(e))
GVector apply_P_inv(const EVector& w);

/// Image of basis(g) under sPb - aPt.
EVector defect_column(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                      const GroupAlgebraElement& s, const GroupAlgebraElement& t,
                      const ReducedWord& g, StarConvention conv);
/// Image of basis(e) under sP^-1 b - aP^-1 t.
GVector defect_inv_column(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                          const GroupAlgebraElement& s, const GroupAlgebraElement& t,
                          const EdgeOrStar& e, StarConvention conv);

/// Union of the equivariance failure sets of every word in supp(b) u supp(t).
/// When a*t = s*b, every column of the defect outside this set vanishes.
std::vector<ReducedWord> defect_column_support(const GroupAlgebraElement& b,
                                               const GroupAlgebraElement& t);

/// Matrix of sPb - aPt : L^2(G) -> L^2(E) + C.
DefectMatrix defect_matrix(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                           const GroupAlgebraElement& s, const GroupAlgebraElement& t,
                           StarConvention conv = StarConvention::Zero);
/// Matrix of sP^-1 b - aP^-1 t : L^2(E) + C -> L^2(G).
DefectMatrix defect_matrix_inv(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                               const GroupAlgebraElement& s, const GroupAlgebraElement& t,
                               StarConvention conv = StarConvention::Zero);
FBlockMatrix f_defect(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                      const GroupAlgebraElement& s, const GroupAlgebraElement& t,
                      StarConvention conv = StarConvention::Zero);

} // namespace ratcrit

#endif
