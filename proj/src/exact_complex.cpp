#include "ratcrit/exact_complex.hpp"

#include <ostream>
#include <stdexcept>

namespace ratcrit {

ExactComplex ExactComplex::from_strings(const std::string& re, const std::string& im) {
  return {parse_rational(re), parse_rational(im)};
}

ExactComplex ExactComplex::inverse() const {
  if (is_zero()) {
    throw std::domain_error("inverse of zero");
  }
  mpq_class n = norm_squared();
  return {re_ / n, -im_ / n};
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o) {
  return *this *= o.inverse();
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational");
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string ExactComplex::to_string() const {
  if (sgn(im_) == 0) {
    return rational_string(re_);
  }
  std::string imag;
  mpq_class mag = abs(im_);
  imag = (mag == 1) ? "i" : rational_string(mag) + "*i";
  if (sgn(re_) == 0) {
    return (sgn(im_) < 0 ? "-" : "") + imag;
  }
  return rational_string(re_) + (sgn(im_) < 0 ? " - " : " + ") + imag;
}

std::ostream& operator<<(std::ostream& os, const ExactComplex& z) { return os << z.to_string(); }

} // namespace ratcrit
