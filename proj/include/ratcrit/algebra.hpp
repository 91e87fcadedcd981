#ifndef RATCRIT_ALGEBRA_HPP
#define RATCRIT_ALGEBRA_HPP

#include "ratcrit/exact_complex.hpp"
#include "ratcrit/freegroup.hpp"

#include <map>
#include <string>

namespace ratcrit {

/// Finitely supported vector with exact coefficients. Zero coefficients are
/// never stored.
template <class Key>
class SparseVector {
public:
  using Map = std::map<Key, ExactComplex>;

  SparseVector() = default;
  static SparseVector basis(Key k) {
    SparseVector v;
    v.add(std::move(k), 1);
    return v;
  }

  void add(const Key& k, const ExactComplex& c) {
    if (c.is_zero()) {
      return;
    }
    auto [it, inserted] = entries_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        entries_.erase(it);
      }
    }
  }

  ExactComplex at(const Key& k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? ExactComplex{} : it->second;
  }

  const Map& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  SparseVector& operator+=(const SparseVector& o) {
    for (const auto& [k, c] : o.entries_) {
      add(k, c);
    }
    return *this;
  }
  SparseVector& operator-=(const SparseVector& o) {
    for (const auto& [k, c] : o.entries_) {
      add(k, -c);
    }
    return *this;
  }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const ExactComplex& c, const SparseVector& v) {
    SparseVector out;
    for (const auto& [k, x] : v.entries_) {
      out.add(k, c * x);
    }
    return out;
  }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

  /// <v, w> = sum v_k conj(w_k)
  friend ExactComplex inner(const SparseVector& v, const SparseVector& w) {
    ExactComplex sum;
    for (const auto& [k, c] : v.entries_) {
      auto it = w.entries_.find(k);
      if (it != w.entries_.end()) {
        sum += c * it->second.conj();
      }
    }
    return sum;
  }

private:
  Map entries_;
};

/// Finitely supported element of L^2(G).
using GVector = SparseVector<ReducedWord>;
/// Finitely supported element of L^2(E) + C.
using EVector = SparseVector<EdgeOrStar>;

/// Element of the group algebra CG with Gaussian-rational coefficients.
class GroupAlgebraElement {
public:
  explicit GroupAlgebraElement(Group group);
  static GroupAlgebraElement scalar(Group group, const ExactComplex& c);
  static GroupAlgebraElement word(Group group, const ReducedWord& w, const ExactComplex& c = 1);

  const Group& group() const { return group_; }
  const std::map<ReducedWord, ExactComplex>& terms() const { return terms_.entries(); }
  ExactComplex coefficient(const ReducedWord& w) const { return terms_.at(w); }
  void add_term(const ReducedWord& w, const ExactComplex& c) { terms_.add(w, c); }

  bool is_zero() const { return terms_.is_zero(); }
  std::size_t size() const { return terms_.size(); }
  /// Longest word in the support; 0 for the zero element.
  int support_radius() const;
  /// Number of inverse letters in the worst support word.
  int max_inverse_letters() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Drops words longer than radius.
  GroupAlgebraElement truncated(int radius) const;

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  GroupAlgebraElement operator-() const;

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return same_group(a.group_, b.group_) && a.terms_ == b.terms_;
  }

  std::string to_string() const;

private:
  Group group_;
  SparseVector<ReducedWord> terms_;
};

GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement ga_scale(const ExactComplex& c, const GroupAlgebraElement& a);
/// Convolution product sum_{g,h} a_g b_h gh.
GroupAlgebraElement ga_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
/// Product keeping only words of length <= radius.
GroupAlgebraElement ga_mul_truncated(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                                     int radius);
/// (sum a_g g)* = sum conj(a_g) g^-1
GroupAlgebraElement ga_adjoint(const GroupAlgebraElement& a);
/// Coefficient of the identity.
ExactComplex trace(const GroupAlgebraElement& a);
/// Sum of all coefficients (the trivial character).
ExactComplex augmentation(const GroupAlgebraElement& a);

inline GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return ga_add(a, b);
}
inline GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement r = a;
  r -= b;
  return r;
}
inline GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return ga_mul(a, b);
}
inline GroupAlgebraElement operator*(const ExactComplex& c, const GroupAlgebraElement& a) {
  return ga_scale(c, a);
}

/// Left multiplication on L^2(G).
GVector act_on_G(const GroupAlgebraElement& a, const GVector& v);
/// Action on L^2(E) + C: edges are translated, the * coordinate follows the
/// chosen convention.
EVector act_on_E(const GroupAlgebraElement& a, const EVector& w,
                 StarConvention conv = StarConvention::Zero);

} // namespace ratcrit

#endif
