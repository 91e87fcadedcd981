#ifndef RATCRIT_FAMILIES_HPP
#define RATCRIT_FAMILIES_HPP

#include "ratcrit/criterion.hpp"

#include <string>
#include <vector>

namespace ratcrit {

/// Built-in series by name. One-variable families live on the first
/// generator and have coefficient c(n) on x^n:
///   geometric:L        L^n
///   polygeometric:L    (n + 1) L^n
///   constant           1
///   fibonacci          1, 1, 2, 3, 5, ...
///   periodic:k         1 when k divides n
///   factorial          1/n!
///   harmonic           1/(n + 1)
///   primes             1 when n is prime
///   catalan-reciprocal 1/C_n
///   gaussian           2^(-n^2)
///   finite:<expr>      the group-algebra element <expr>
/// Throws ParseError for unknown names or malformed parameters.
SeriesStream make_family(const Group& group, const std::string& spec);

/// c(0), ..., c(count - 1) along the powers of the first generator.
std::vector<ExactComplex> power_coefficients(const SeriesStream& u, int count);

/// Ten one-variable families covering rational and non-rational behaviour.
std::vector<std::string> reference_corpus();

} // namespace ratcrit

#endif
