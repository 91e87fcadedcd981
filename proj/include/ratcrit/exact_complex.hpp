#ifndef RATCRIT_EXACT_COMPLEX_HPP
#define RATCRIT_EXACT_COMPLEX_HPP

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>

namespace ratcrit {

/// Gaussian rational re + im*i with exact GMP arithmetic.
class ExactComplex {
public:
  ExactComplex() = default;
  ExactComplex(long n) : re_(n) {}
  ExactComplex(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static ExactComplex i() { return {0, 1}; }
  /// Parses "p/q" strings for both parts.
  static ExactComplex from_strings(const std::string& re, const std::string& im);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ExactComplex conj() const { return {re_, -im_}; }
  mpq_class norm_squared() const { return re_ * re_ + im_ * im_; }
  /// Throws std::domain_error on zero.
  ExactComplex inverse() const;

  ExactComplex& operator+=(const ExactComplex& o);
  ExactComplex& operator-=(const ExactComplex& o);
  ExactComplex& operator*=(const ExactComplex& o);
  ExactComplex& operator/=(const ExactComplex& o);

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
  ExactComplex operator-() const { return {-re_, -im_}; }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Text form accepted by the expression grammar, e.g. "3/2", "-1/3*i", "1 + 2*i".
  std::string to_string() const;

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactComplex& z);

/// "p/q" (or "p") text of a rational.
std::string rational_string(const mpq_class& q);
/// Inverse of rational_string; throws std::invalid_argument on bad input.
mpq_class parse_rational(const std::string& text);

} // namespace ratcrit

#endif
