#ifndef RATCRIT_CRITERION_HPP
#define RATCRIT_CRITERION_HPP

#include "ratcrit/fredholm.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ratcrit {

/// (a, b, s, t) over CG with a*t = s*b, presenting u = s^-1 a = b t^-1.
class Quadruple {
public:
  const GroupAlgebraElement& a() const { return a_; }
  const GroupAlgebraElement& b() const { return b_; }
  const GroupAlgebraElement& s() const { return s_; }
  const GroupAlgebraElement& t() const { return t_; }
  const Group& group() const { return a_.group(); }

private:
  friend Quadruple make_quadruple(GroupAlgebraElement, GroupAlgebraElement, GroupAlgebraElement,
                                  GroupAlgebraElement);
  Quadruple(GroupAlgebraElement a, GroupAlgebraElement b, GroupAlgebraElement s,
            GroupAlgebraElement t)
      : a_(std::move(a)), b_(std::move(b)), s_(std::move(s)), t_(std::move(t)) {}

  GroupAlgebraElement a_, b_, s_, t_;
};

/// Throws ZeroDenominator when s or t is zero and IdentityViolation when
/// a*t != s*b.
Quadruple make_quadruple(GroupAlgebraElement a, GroupAlgebraElement b, GroupAlgebraElement s,
                         GroupAlgebraElement t);

struct CriterionReport {
  bool identity_holds = false;
  StarConvention convention = StarConvention::Zero;
  std::size_t rank_P = 0;
  std::size_t rank_P_inv = 0;
  std::size_t rank_F = 0;
  /// Both defect matrices had their boundary ring verified to vanish.
  bool certified = false;
  std::vector<Label> witness_P;
  std::vector<Label> witness_P_inv;
  DefectMatrix p_matrix;
  DefectMatrix p_inv_matrix;
};

CriterionReport check_criterion(const Quadruple& q, StarConvention conv = StarConvention::Zero);

/// u + v for u = (a, b, s, t), v = (c, d, s, t) sharing denominators.
Quadruple sum_quadruple(const Quadruple& u, const Quadruple& v);
/// uv for u = p^-1 q = x y^-1 given as (q, x, p, y) and v = q^-1 r = y z^-1
/// given as (r, y, q, z); the product is (r, x, p, z).
Quadruple product_quadruple(const Quadruple& u, const Quadruple& v);
/// u^-1 = a^-1 s = t b^-1, i.e. (s, t, a, b). Needs a, b nonzero.
Quadruple inverse_quadruple(const Quadruple& u);
/// u* = (t*)^-1 b* = a* (s*)^-1, i.e. (b*, a*, t*, s*).
Quadruple adjoint_quadruple(const Quadruple& u);

/// Each check compares the assembled defect matrices entry by entry, for both
/// the P and the P^-1 defects. They throw DenominatorMismatch when the
/// quadruples are not in the required shared or chained form.
bool check_additivity(const Quadruple& u, const Quadruple& v, StarConvention conv);
bool check_multiplicativity(const Quadruple& u, const Quadruple& v, StarConvention conv);
bool check_inverse(const Quadruple& u, StarConvention conv);
bool check_adjoint(const Quadruple& u, StarConvention conv);

struct LemmaReport {
  std::optional<bool> additivity;
  std::optional<bool> multiplicativity;
  bool inverse = false;
  bool adjoint = false;

  bool all_passed() const {
    return additivity.value_or(true) && multiplicativity.value_or(true) && inverse && adjoint;
  }
};

/// Runs whichever of the sum/product identities the pair admits plus the
/// inverse and adjoint identities on both quadruples. Throws
/// DenominatorMismatch when the pair admits neither.
LemmaReport lemma_identity_suite(const Quadruple& u, const Quadruple& v,
                                 StarConvention conv = StarConvention::Zero);

/// Coefficient oracle for an element given as a (possibly infinite) series.
struct SeriesStream {
  Group group;
  std::string name;
  std::function<ExactComplex(const ReducedWord&)> coefficient;
  /// Words of length <= r that may carry a nonzero coefficient.
  std::function<std::vector<ReducedWord>(int)> support_bound;
  /// Largest radius the oracle can serve; nullopt when unbounded.
  std::optional<int> max_radius;
  /// The whole support is known (lies inside support_bound(*max_radius)).
  bool finite_support = false;
};

/// Checks the radius against max_radius before calling the oracle.
ExactComplex stream_coefficient(const SeriesStream& u, const ReducedWord& w);
/// Coefficients of all support words up to radius r.
std::map<ReducedWord, ExactComplex> stream_coefficients(const SeriesStream& u, int radius);

SeriesStream stream_from_element(const GroupAlgebraElement& a, std::string name = "finite");
/// Finitely many known coefficients; sound up to `radius` only.
SeriesStream stream_from_truncation(const GroupAlgebraElement& known, int radius,
                                    std::string name);
/// sum_n c(n) x^n over n >= 0 for the first generator.
SeriesStream one_variable_stream(Group group, std::string name,
                                 std::function<ExactComplex(long)> coefficient);

/// rho[j][k]: rank of the commutation defect block with columns in the
/// G-ball of radius j and rows in the (E u {*})-ball of radius k.
struct RankProfile {
  int jmax = 0;
  int kmax = 0;
  std::vector<std::vector<std::size_t>> rho;

  std::size_t at(int j, int k) const { return rho.at(j).at(k); }
  std::vector<std::size_t> diagonal() const;
};

/// Profile of Pu - uP. A row e lies in the ball of radius k when
/// |pi^-1(e)| <= k.
RankProfile windowed_profile(const SeriesStream& u, int jmax, int kmax,
                             StarConvention conv = StarConvention::Zero);
/// Same for P^-1 u - u P^-1 (columns in E u {*}, rows in G).
RankProfile windowed_profile_inv(const SeriesStream& u, int jmax, int kmax,
                                 StarConvention conv = StarConvention::Zero);
/// rho(j, j) for j = 0..window without filling the full table.
std::vector<std::size_t> diagonal_profile(const SeriesStream& u, int window,
                                          StarConvention conv = StarConvention::Zero);

/// Ranks of the m x m Hankel matrices (c_{i+j}) for m = 1..order. Needs at
/// least 2*order - 1 coefficients.
std::vector<std::size_t> hankel_rank_profile(const std::vector<ExactComplex>& coeffs, int order);

enum class Verdict { Stabilized, Growing };

/// Semi-decision from a finite rank sequence: stabilized when the last
/// `plateau` increments are all zero.
struct Classification {
  Verdict verdict = Verdict::Growing;
  std::size_t rank = 0; ///< the plateau value when stabilized
  std::vector<std::size_t> ranks;
  std::vector<long> increments;
  int window = 0;
  int plateau = 0;
};

Classification classify_ranks(std::vector<std::size_t> ranks, int plateau);
/// Requires window >= plateau + 2 (std::invalid_argument otherwise).
Classification classify(const SeriesStream& u, int window, int plateau = 4,
                        StarConvention conv = StarConvention::Zero);

std::string verdict_name(Verdict v);

} // namespace ratcrit

#endif
