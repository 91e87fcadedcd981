#ifndef RATCRIT_ERRORS_HPP
#define RATCRIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratcrit {

// Base for every failure the library reports. CLI exit codes are keyed on
// the concrete subclass.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class InvalidGenerator : public Error {
public:
  using Error::Error;
};

class GeneratorMismatch : public Error {
public:
  GeneratorMismatch() : Error("operands belong to different generator sets") {}
};

class IdentityViolation : public Error {
public:
  IdentityViolation(std::string residual)
      : Error("a*t - s*b = " + residual + " is nonzero"), residual_(std::move(residual)) {}
  const std::string& residual() const { return residual_; }

private:
  std::string residual_;
};

class ZeroDenominator : public Error {
public:
  using Error::Error;
};

class DenominatorMismatch : public Error {
public:
  using Error::Error;
};

class StreamTruncated : public Error {
public:
  using Error::Error;
};

class NotExpandable : public Error {
public:
  using Error::Error;
};

class SingularConstantTerm : public Error {
public:
  using Error::Error;
};

class DominanceFailure : public Error {
public:
  DominanceFailure(const std::string& node, double ratio)
      : Error("l1 dominance fails at " + node + " (ratio " + std::to_string(ratio) + ")"),
        ratio_(ratio) {}
  double ratio() const { return ratio_; }

private:
  double ratio_;
};

class RankUnsupported : public Error {
public:
  using Error::Error;
};

class DivisionByZeroPolynomial : public Error {
public:
  using Error::Error;
};

class InsufficientCoefficients : public Error {
public:
  using Error::Error;
};

/// An expression that does not denote an element of CG (an inverse of
/// something other than a scalar multiple of a group element).
class NotInGroupAlgebra : public Error {
public:
  using Error::Error;
};

} // namespace ratcrit

#endif
