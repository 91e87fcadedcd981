#include "ratcrit/algebra.hpp"

#include "ratcrit/errors.hpp"

#include <algorithm>

namespace ratcrit {

namespace {

void require_same(const Group& a, const Group& b) {
  if (!same_group(a, b)) {
    throw GeneratorMismatch();
  }
}

std::string coefficient_prefix(const ExactComplex& c, bool first) {
  // Returns the sign-and-coefficient text that precedes a non-identity word.
  std::string sign;
  ExactComplex mag = c;
  if (c.is_real() && sgn(c.re()) < 0) {
    sign = first ? "-" : " - ";
    mag = -c;
  } else if (sgn(c.re()) == 0 && sgn(c.im()) < 0) {
    sign = first ? "-" : " - ";
    mag = -c;
  } else if (!first) {
    sign = " + ";
  }
  if (mag == ExactComplex(1)) {
    return sign;
  }
  if (mag.is_real() || sgn(mag.re()) == 0) {
    return sign + mag.to_string() + "*";
  }
  return sign + "(" + mag.to_string() + ")*";
}

} // namespace

GroupAlgebraElement::GroupAlgebraElement(Group group) : group_(std::move(group)) {}

GroupAlgebraElement GroupAlgebraElement::scalar(Group group, const ExactComplex& c) {
  return word(std::move(group), ReducedWord{}, c);
}

GroupAlgebraElement GroupAlgebraElement::word(Group group, const ReducedWord& w,
                                              const ExactComplex& c) {
  if (w.max_generator() > group->rank()) {
    throw InvalidGenerator("word uses a generator outside the group");
  }
  GroupAlgebraElement a(std::move(group));
  a.add_term(w, c);
  return a;
}

int GroupAlgebraElement::support_radius() const {
  int r = 0;
  for (const auto& [w, c] : terms()) {
    r = std::max(r, static_cast<int>(w.length()));
  }
  return r;
}

int GroupAlgebraElement::max_inverse_letters() const {
  int worst = 0;
  for (const auto& [w, c] : terms()) {
    int n = static_cast<int>(std::count_if(w.letters().begin(), w.letters().end(),
                                           [](Letter l) { return l < 0; }));
    worst = std::max(worst, n);
  }
  return worst;
}

GroupAlgebraElement GroupAlgebraElement::truncated(int radius) const {
  GroupAlgebraElement out(group_);
  for (const auto& [w, c] : terms()) {
    if (static_cast<int>(w.length()) <= radius) {
      out.add_term(w, c);
    }
  }
  return out;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  require_same(group_, o.group_);
  terms_ += o.terms_;
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  require_same(group_, o.group_);
  terms_ -= o.terms_;
  return *this;
}

GroupAlgebraElement GroupAlgebraElement::operator-() const { return ga_scale(-1, *this); }

std::string GroupAlgebraElement::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms()) {
    if (w.is_identity()) {
      if (c.is_real() || sgn(c.re()) == 0) {
        bool negative = c.is_real() ? sgn(c.re()) < 0 : sgn(c.im()) < 0;
        if (first) {
          out += c.to_string();
        } else {
          out += (negative ? " - " : " + ") + (negative ? (-c).to_string() : c.to_string());
        }
      } else {
        out += (first ? "(" : " + (") + c.to_string() + ")";
      }
    } else {
      out += coefficient_prefix(c, first) + format_word(*group_, w);
    }
    first = false;
  }
  return out;
}

GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement r = a;
  r += b;
  return r;
}

GroupAlgebraElement ga_scale(const ExactComplex& c, const GroupAlgebraElement& a) {
  GroupAlgebraElement out(a.group());
  if (c.is_zero()) {
    return out;
  }
  for (const auto& [w, x] : a.terms()) {
    out.add_term(w, c * x);
  }
  return out;
}

GroupAlgebraElement ga_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  require_same(a.group(), b.group());
  GroupAlgebraElement out(a.group());
  for (const auto& [g, x] : a.terms()) {
    for (const auto& [h, y] : b.terms()) {
      out.add_term(multiply(g, h), x * y);
    }
  }
  return out;
}

GroupAlgebraElement ga_mul_truncated(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                                     int radius) {
  require_same(a.group(), b.group());
  GroupAlgebraElement out(a.group());
  for (const auto& [g, x] : a.terms()) {
    for (const auto& [h, y] : b.terms()) {
      std::size_t len = g.length() + h.length() - 2 * cancellation_length(g, h);
      if (static_cast<int>(len) <= radius) {
        out.add_term(multiply(g, h), x * y);
      }
    }
  }
  return out;
}

GroupAlgebraElement ga_adjoint(const GroupAlgebraElement& a) {
  GroupAlgebraElement out(a.group());
  for (const auto& [g, x] : a.terms()) {
    out.add_term(invert(g), x.conj());
  }
  return out;
}

ExactComplex trace(const GroupAlgebraElement& a) { return a.coefficient(ReducedWord{}); }

ExactComplex augmentation(const GroupAlgebraElement& a) {
  ExactComplex sum;
  for (const auto& [g, x] : a.terms()) {
    sum += x;
  }
  return sum;
}

GVector act_on_G(const GroupAlgebraElement& a, const GVector& v) {
  GVector out;
  for (const auto& [g, x] : a.terms()) {
    for (const auto& [h, y] : v.entries()) {
      out.add(multiply(g, h), x * y);
    }
  }
  return out;
}

EVector act_on_E(const GroupAlgebraElement& a, const EVector& w, StarConvention conv) {
  EVector out;
  for (const auto& [e, y] : w.entries()) {
    if (e.is_star()) {
      // Unital: every g fixes *. Zero: every g != 1 kills *.
      out.add(e, (conv == StarConvention::Unital ? augmentation(a) : trace(a)) * y);
      continue;
    }
    for (const auto& [g, x] : a.terms()) {
      out.add(Edge{multiply(g, e.edge().base), e.edge().gen}, x * y);
    }
  }
  return out;
}

} // namespace ratcrit
