#include "ratcrit/rank.hpp"

#include <stdexcept>
#include <utility>

namespace ratcrit {

namespace {

struct GaussInt {
  mpz_class re;
  mpz_class im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

// a / b where b divides a in Z[i].
GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  mpz_class n = b.re * b.re + b.im * b.im;
  mpz_class re = a.re * b.re + a.im * b.im;
  mpz_class im = a.im * b.re - a.re * b.im;
  GaussInt q;
  mpz_class r;
  mpz_tdiv_qr(q.re.get_mpz_t(), r.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  if (sgn(r) != 0) {
    throw std::logic_error("Bareiss division was not exact");
  }
  mpz_tdiv_qr(q.im.get_mpz_t(), r.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
  if (sgn(r) != 0) {
    throw std::logic_error("Bareiss division was not exact");
  }
  return q;
}

std::vector<std::vector<GaussInt>> to_gaussian_integers(const ExactMatrix& m) {
  std::vector<std::vector<GaussInt>> out(m.rows(), std::vector<GaussInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).im().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& z = m(i, j);
      out[i][j].re = z.re().get_num() * (l / z.re().get_den());
      out[i][j].im = z.im().get_num() * (l / z.im().get_den());
    }
  }
  return out;
}

} // namespace

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& z : data_) {
    if (!z.is_zero()) {
      return false;
    }
  }
  return true;
}

ExactMatrix ExactMatrix::conj_transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      t(j, i) = (*this)(i, j).conj();
    }
  }
  return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix shapes do not compose");
  }
  ExactMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) {
          c(i, j) += a(i, k) * b(k, j);
        }
      }
    }
  }
  return c;
}

RankResult rank_with_pivots(const ExactMatrix& m) {
  RankResult result;
  if (m.rows() == 0 || m.cols() == 0) {
    return result;
  }
  auto a = to_gaussian_integers(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  GaussInt prev{1, 0};
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) {
      ++p;
    }
    if (p == rows) {
      continue;
    }
    std::swap(a[p], a[r]);
    const GaussInt pivot = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const GaussInt lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        GaussInt v = sub(mul(pivot, a[i][j]), mul(lead, a[r][j]));
        a[i][j] = v.is_zero() ? v : exact_div(v, prev);
      }
      a[i][c] = GaussInt{};
    }
    prev = pivot;
    result.pivot_columns.push_back(c);
    ++r;
  }
  result.rank = r;
  return result;
}

std::size_t rank(const ExactMatrix& m) { return rank_with_pivots(m).rank; }

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("inverse of a non-square matrix");
  }
  const std::size_t n = m.rows();
  ExactMatrix a = m;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) {
      ++p;
    }
    if (p == n) {
      throw std::domain_error("singular matrix");
    }
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const ExactComplex scale = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= scale;
      inv(c, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) {
        continue;
      }
      const ExactComplex f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(c, j).is_zero()) {
          a(i, j) -= f * a(c, j);
        }
        if (!inv(c, j).is_zero()) {
          inv(i, j) -= f * inv(c, j);
        }
      }
    }
  }
  return inv;
}

} // namespace ratcrit
