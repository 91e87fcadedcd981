#ifndef RATCRIT_RANK_HPP
#define RATCRIT_RANK_HPP

#include "ratcrit/exact_complex.hpp"

#include <cstddef>
#include <vector>

namespace ratcrit {

/// Dense row-major matrix over the Gaussian rationals.
class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  ExactComplex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ExactComplex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  ExactMatrix conj_transpose() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactComplex> data_;
};

struct RankResult {
  std::size_t rank = 0;
  /// Columns that carry a pivot; together they span the column space.
  std::vector<std::size_t> pivot_columns;
};

/// Exact rank by fraction-free (Bareiss) elimination. Each row is first
/// cleared of denominators, then elimination runs over the Gaussian integers
/// with exact divisions by the previous pivot.
RankResult rank_with_pivots(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);

/// Inverse of a square matrix by Gauss-Jordan over the Gaussian rationals;
/// throws std::domain_error when singular.
ExactMatrix inverse(const ExactMatrix& m);

} // namespace ratcrit

#endif
