#include "ratcrit/families.hpp"

#include "ratcrit/errors.hpp"
#include "ratcrit/expression.hpp"

namespace ratcrit {

namespace {

ExactComplex parse_scalar(const Group& group, const std::string& text, const std::string& spec) {
  GroupAlgebraElement a = parse_group_algebra(group, text);
  for (const auto& [w, c] : a.terms()) {
    if (!w.is_identity()) {
      throw ParseError("family '" + spec + "' needs a scalar parameter", 0);
    }
  }
  return trace(a);
}

ExactComplex power(const ExactComplex& base, long n) {
  ExactComplex r(1);
  for (long i = 0; i < n; ++i) r *= base;
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

mpz_class catalan(long n) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
  return c / (n + 1);
}

} // namespace

SeriesStream make_family(const Group& group, const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto need_arg = [&] {
    if (arg.empty()) {
      throw ParseError("family '" + name + "' needs a parameter (" + name + ":<value>)", 0);
    }
  };
  auto no_arg = [&] {
    if (colon != std::string::npos) {
      throw ParseError("family '" + name + "' takes no parameter", colon);
    }
  };

  std::function<ExactComplex(long)> c;
  if (name == "finite") {
    need_arg();
    return stream_from_element(parse_group_algebra(group, arg), spec);
  } else if (name == "geometric") {
    need_arg();
    ExactComplex l = parse_scalar(group, arg, spec);
    c = [l](long n) { return power(l, n); };
  } else if (name == "polygeometric") {
    need_arg();
    ExactComplex l = parse_scalar(group, arg, spec);
    c = [l](long n) { return ExactComplex(n + 1) * power(l, n); };
  } else if (name == "constant") {
    no_arg();
    c = [](long) { return ExactComplex(1); };
  } else if (name == "fibonacci") {
    no_arg();
    c = [](long n) {
      mpz_class f;
      mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(n + 1));
      return ExactComplex(mpq_class(f));
    };
  } else if (name == "periodic") {
    need_arg();
    long k = 0;
    try {
      k = std::stol(arg);
    } catch (const std::exception&) {
      throw ParseError("periodic needs a positive integer period", colon + 1);
    }
    if (k < 1) {
      throw ParseError("periodic needs a positive integer period", colon + 1);
    }
    c = [k](long n) { return ExactComplex(n % k == 0 ? 1 : 0); };
  } else if (name == "factorial") {
    no_arg();
    c = [](long n) {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
      return ExactComplex(mpq_class(1, f));
    };
  } else if (name == "harmonic") {
    no_arg();
    c = [](long n) { return ExactComplex(mpq_class(1, n + 1)); };
  } else if (name == "primes") {
    no_arg();
    c = [](long n) { return ExactComplex(is_prime(n) ? 1 : 0); };
  } else if (name == "catalan-reciprocal") {
    no_arg();
    c = [](long n) { return ExactComplex(mpq_class(mpz_class(1), catalan(n))); };
  } else if (name == "gaussian") {
    no_arg();
    c = [](long n) {
      mpz_class d = 1;
      d <<= static_cast<mp_bitcnt_t>(n * n);
      return ExactComplex(mpq_class(mpz_class(1), d));
    };
  } else {
    throw ParseError("unknown series family '" + name + "'", 0);
  }
  return one_variable_stream(group, spec, std::move(c));
}

std::vector<ExactComplex> power_coefficients(const SeriesStream& u, int count) {
  std::vector<ExactComplex> out;
  for (int n = 0; n < count; ++n) {
    out.push_back(stream_coefficient(u, ReducedWord::from_reduced(std::vector<Letter>(n, 1))));
  }
  return out;
}

std::vector<std::string> reference_corpus() {
  return {"geometric:1/2", "polygeometric:1/3", "finite:1 - 2*x + 1/3*x*x*x",
          "fibonacci",     "periodic:3",        "factorial",
          "harmonic",      "primes",            "catalan-reciprocal",
          "gaussian"};
}

} // namespace ratcrit
