#include "ratcrit/criterion.hpp"

#include "ratcrit/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ratcrit {

namespace {

void require_nonzero(const GroupAlgebraElement& x, const char* what) {
  if (x.is_zero()) {
    throw ZeroDenominator(std::string(what) + " must be nonzero");
  }
}

bool same_defects(const SparseMatrix& lhs, const SparseMatrix& rhs) { return lhs == rhs; }

SparseMatrix p_defect(const Quadruple& q, StarConvention conv) {
  return defect_matrix(q.a(), q.b(), q.s(), q.t(), conv).sparse();
}

SparseMatrix p_inv_defect(const Quadruple& q, StarConvention conv) {
  return defect_matrix_inv(q.a(), q.b(), q.s(), q.t(), conv).sparse();
}

// Pu - uP (or P^-1 u - u P^-1) columns restricted to the radius-kmax ball.
struct Window {
  std::vector<Label> cols;
  std::vector<int> col_radius;
  std::vector<std::map<Label, ExactComplex>> columns;
  std::map<Label, int> row_radius;
};

ExactComplex stream_augmentation(const SeriesStream& u) {
  if (!u.finite_support || !u.max_radius) {
    throw StreamTruncated("the unital convention needs the full coefficient sum of '" + u.name +
                          "', which an infinite stream cannot serve");
  }
  ExactComplex sum;
  for (const auto& [w, c] : stream_coefficients(u, *u.max_radius)) {
    sum += c;
  }
  return sum;
}

void add_entry(std::map<Label, ExactComplex>& col, const Label& row, const ExactComplex& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = col.try_emplace(row, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      col.erase(it);
    }
  }
}

Window build_window(const SeriesStream& u, int jmax, int kmax, StarConvention conv) {
  const auto coeffs = stream_coefficients(u, jmax + kmax);
  Window win;
  for (const auto& g : ball(u.group->rank(), jmax)) {
    std::map<Label, ExactComplex> col;
    // P(u g): coefficient c_w lands on pi(wg).
    for (const auto& [w, c] : coeffs) {
      ReducedWord h = multiply(w, g);
      if (static_cast<int>(h.length()) <= kmax) {
        add_entry(col, Label(pi(h)), c);
      }
    }
    // u P(g)
    EdgeOrStar e = pi(g);
    if (e.is_star()) {
      if (conv == StarConvention::Unital) {
        add_entry(col, Label(e), -stream_augmentation(u));
      }
    } else {
      for (const auto& [w, c] : coeffs) {
        EdgeOrStar moved(Edge{multiply(w, e.edge().base), e.edge().gen});
        if (static_cast<int>(pi_inverse(moved).length()) <= kmax) {
          add_entry(col, Label(moved), -c);
        }
      }
    }
    for (const auto& [row, c] : col) {
      win.row_radius.try_emplace(row, static_cast<int>(pi_inverse(std::get<EdgeOrStar>(row)).length()));
    }
    win.cols.emplace_back(g);
    win.col_radius.push_back(static_cast<int>(g.length()));
    win.columns.push_back(std::move(col));
  }
  return win;
}

Window build_window_inv(const SeriesStream& u, int jmax, int kmax, StarConvention conv) {
  const auto coeffs = stream_coefficients(u, jmax + kmax);
  Window win;
  for (const auto& g : ball(u.group->rank(), jmax)) {
    EdgeOrStar e = pi(g);
    std::map<Label, ExactComplex> col;
    // P^-1(u e)
    if (e.is_star()) {
      if (conv == StarConvention::Unital) {
        add_entry(col, Label(ReducedWord{}), stream_augmentation(u));
      }
    } else {
      for (const auto& [w, c] : coeffs) {
        ReducedWord h = pi_inverse(EdgeOrStar(Edge{multiply(w, e.edge().base), e.edge().gen}));
        if (static_cast<int>(h.length()) <= kmax) {
          add_entry(col, Label(h), c);
        }
      }
    }
    // u P^-1(e) = u g
    for (const auto& [w, c] : coeffs) {
      ReducedWord h = multiply(w, g);
      if (static_cast<int>(h.length()) <= kmax) {
        add_entry(col, Label(h), -c);
      }
    }
    for (const auto& [row, c] : col) {
      win.row_radius.try_emplace(row, static_cast<int>(std::get<ReducedWord>(row).length()));
    }
    win.cols.emplace_back(e);
    win.col_radius.push_back(static_cast<int>(g.length()));
    win.columns.push_back(std::move(col));
  }
  return win;
}

std::size_t window_rank(const Window& win, int j, int k) {
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < win.cols.size(); ++c) {
    if (win.col_radius[c] <= j) {
      cols.push_back(c);
    }
  }
  std::map<Label, std::size_t> rows;
  for (const auto& [row, r] : win.row_radius) {
    if (r <= k) {
      rows.emplace(row, rows.size());
    }
  }
  // Only rows and columns that carry a nonzero entry affect the rank.
  std::vector<std::size_t> live_cols;
  std::set<std::size_t> live_rows;
  for (std::size_t c : cols) {
    bool any = false;
    for (const auto& [row, v] : win.columns[c]) {
      auto it = rows.find(row);
      if (it != rows.end()) {
        live_rows.insert(it->second);
        any = true;
      }
    }
    if (any) {
      live_cols.push_back(c);
    }
  }
  std::map<std::size_t, std::size_t> row_pos;
  for (std::size_t r : live_rows) {
    row_pos.emplace(r, row_pos.size());
  }
  ExactMatrix m(row_pos.size(), live_cols.size());
  for (std::size_t j2 = 0; j2 < live_cols.size(); ++j2) {
    for (const auto& [row, v] : win.columns[live_cols[j2]]) {
      auto it = rows.find(row);
      if (it != rows.end()) {
        m(row_pos.at(it->second), j2) = v;
      }
    }
  }
  return rank(m);
}

RankProfile profile_from(const Window& win, int jmax, int kmax) {
  RankProfile p;
  p.jmax = jmax;
  p.kmax = kmax;
  p.rho.assign(jmax + 1, std::vector<std::size_t>(kmax + 1, 0));
  for (int j = 0; j <= jmax; ++j) {
    for (int k = 0; k <= kmax; ++k) {
      p.rho[j][k] = window_rank(win, j, k);
    }
  }
  return p;
}

void check_radii(int jmax, int kmax) {
  if (jmax < 0 || kmax < 0) {
    throw std::invalid_argument("window radii must be nonnegative");
  }
}

} // namespace

Quadruple make_quadruple(GroupAlgebraElement a, GroupAlgebraElement b, GroupAlgebraElement s,
                         GroupAlgebraElement t) {
  if (!same_group(a.group(), b.group()) || !same_group(a.group(), s.group()) ||
      !same_group(a.group(), t.group())) {
    throw GeneratorMismatch();
  }
  require_nonzero(s, "s");
  require_nonzero(t, "t");
  GroupAlgebraElement residual = a * t - s * b;
  if (!residual.is_zero()) {
    throw IdentityViolation(residual.to_string());
  }
  return Quadruple(std::move(a), std::move(b), std::move(s), std::move(t));
}

CriterionReport check_criterion(const Quadruple& q, StarConvention conv) {
  CriterionReport r;
  r.convention = conv;
  r.identity_holds = (q.a() * q.t() - q.s() * q.b()).is_zero();
  FBlockMatrix f = f_defect(q.a(), q.b(), q.s(), q.t(), conv);
  RankResult rp = f.p_block.rank_result();
  RankResult ri = f.p_inv_block.rank_result();
  r.rank_P = rp.rank;
  r.rank_P_inv = ri.rank;
  r.rank_F = rank(f);
  for (std::size_t c : rp.pivot_columns) {
    r.witness_P.push_back(f.p_block.cols[c]);
  }
  for (std::size_t c : ri.pivot_columns) {
    r.witness_P_inv.push_back(f.p_inv_block.cols[c]);
  }
  r.certified = f.p_block.boundary_zero && f.p_inv_block.boundary_zero;
  r.p_matrix = std::move(f.p_block);
  r.p_inv_matrix = std::move(f.p_inv_block);
  return r;
}

Quadruple sum_quadruple(const Quadruple& u, const Quadruple& v) {
  if (!(u.s() == v.s()) || !(u.t() == v.t())) {
    throw DenominatorMismatch("sum needs shared denominators s and t");
  }
  return make_quadruple(u.a() + v.a(), u.b() + v.b(), u.s(), u.t());
}

Quadruple product_quadruple(const Quadruple& u, const Quadruple& v) {
  // u = (q, x, p, y), v = (r, y, q, z)
  if (!(v.s() == u.a()) || !(v.b() == u.t())) {
    throw DenominatorMismatch("product needs the chained form u = p^-1 q = x y^-1, "
                              "v = q^-1 r = y z^-1");
  }
  return make_quadruple(v.a(), u.b(), u.s(), v.t());
}

Quadruple inverse_quadruple(const Quadruple& u) {
  return make_quadruple(u.s(), u.t(), u.a(), u.b());
}

Quadruple adjoint_quadruple(const Quadruple& u) {
  return make_quadruple(ga_adjoint(u.b()), ga_adjoint(u.a()), ga_adjoint(u.t()),
                        ga_adjoint(u.s()));
}

bool check_additivity(const Quadruple& u, const Quadruple& v, StarConvention conv) {
  Quadruple w = sum_quadruple(u, v);
  return same_defects(p_defect(w, conv), p_defect(u, conv) + p_defect(v, conv)) &&
         same_defects(p_inv_defect(w, conv), p_inv_defect(u, conv) + p_inv_defect(v, conv));
}

bool check_multiplicativity(const Quadruple& u, const Quadruple& v, StarConvention conv) {
  Quadruple w = product_quadruple(u, v);
  // pPx - rPz = (pPx - qPy) + (qPy - rPz)
  return same_defects(p_defect(w, conv), p_defect(u, conv) + p_defect(v, conv)) &&
         same_defects(p_inv_defect(w, conv), p_inv_defect(u, conv) + p_inv_defect(v, conv));
}

bool check_inverse(const Quadruple& u, StarConvention conv) {
  if (u.a().is_zero() || u.b().is_zero()) {
    throw DenominatorMismatch("inverse needs a and b nonzero");
  }
  Quadruple w = inverse_quadruple(u);
  DefectMatrix d = defect_matrix(u.a(), u.b(), u.s(), u.t(), conv);
  DefectMatrix dw = defect_matrix(w.a(), w.b(), w.s(), w.t(), conv);
  DefectMatrix di = defect_matrix_inv(u.a(), u.b(), u.s(), u.t(), conv);
  DefectMatrix dwi = defect_matrix_inv(w.a(), w.b(), w.s(), w.t(), conv);
  return same_defects(dw.sparse(), -d.sparse()) && same_defects(dwi.sparse(), -di.sparse()) &&
         rank(d) == rank(dw) && rank(di) == rank(dwi);
}

bool check_adjoint(const Quadruple& u, StarConvention conv) {
  const auto as = ga_adjoint(u.a());
  const auto bs = ga_adjoint(u.b());
  const auto ss = ga_adjoint(u.s());
  const auto ts = ga_adjoint(u.t());
  DefectMatrix d = defect_matrix(u.a(), u.b(), u.s(), u.t(), conv);
  DefectMatrix di = defect_matrix_inv(u.a(), u.b(), u.s(), u.t(), conv);
  // (sPb - aPt)^H = b* P^-1 s* - t* P^-1 a*, the P^-1 defect of (t*, s*, b*, a*).
  DefectMatrix flipped_inv = defect_matrix_inv(ts, ss, bs, as, conv);
  DefectMatrix flipped = defect_matrix(ts, ss, bs, as, conv);
  Quadruple adj = adjoint_quadruple(u);
  DefectMatrix adj_p = defect_matrix(adj.a(), adj.b(), adj.s(), adj.t(), conv);
  DefectMatrix adj_pi = defect_matrix_inv(adj.a(), adj.b(), adj.s(), adj.t(), conv);
  return same_defects(d.conj_transpose().sparse(), flipped_inv.sparse()) &&
         same_defects(di.conj_transpose().sparse(), flipped.sparse()) &&
         same_defects(adj_pi.sparse(), -d.conj_transpose().sparse()) &&
         rank(adj_pi) == rank(d) && rank(adj_p) == rank(di);
}

LemmaReport lemma_identity_suite(const Quadruple& u, const Quadruple& v, StarConvention conv) {
  LemmaReport r;
  const bool shared = u.s() == v.s() && u.t() == v.t();
  const bool chained = v.s() == u.a() && v.b() == u.t();
  if (!shared && !chained) {
    throw DenominatorMismatch("quadruples share neither denominators nor a chained middle term");
  }
  if (shared) {
    r.additivity = check_additivity(u, v, conv);
  }
  if (chained) {
    r.multiplicativity = check_multiplicativity(u, v, conv);
  }
  r.inverse = true;
  for (const Quadruple* q : {&u, &v}) {
    if (!q->a().is_zero() && !q->b().is_zero()) {
      r.inverse = r.inverse && check_inverse(*q, conv);
    }
  }
  r.adjoint = check_adjoint(u, conv) && check_adjoint(v, conv);
  return r;
}

ExactComplex stream_coefficient(const SeriesStream& u, const ReducedWord& w) {
  if (u.max_radius && static_cast<int>(w.length()) > *u.max_radius) {
    if (u.finite_support) {
      return {};
    }
    throw StreamTruncated("stream '" + u.name + "' cannot serve words beyond radius " +
                          std::to_string(*u.max_radius));
  }
  return u.coefficient(w);
}

std::map<ReducedWord, ExactComplex> stream_coefficients(const SeriesStream& u, int radius) {
  int served = radius;
  if (u.max_radius && radius > *u.max_radius) {
    if (!u.finite_support) {
      throw StreamTruncated("stream '" + u.name + "' is known only up to radius " +
                            std::to_string(*u.max_radius) + ", radius " + std::to_string(radius) +
                            " requested");
    }
    served = *u.max_radius;
  }
  std::map<ReducedWord, ExactComplex> out;
  for (const auto& w : u.support_bound(served)) {
    ExactComplex c = u.coefficient(w);
    if (!c.is_zero()) {
      out.emplace(w, std::move(c));
    }
  }
  return out;
}

SeriesStream stream_from_element(const GroupAlgebraElement& a, std::string name) {
  SeriesStream s = stream_from_truncation(a, a.support_radius(), std::move(name));
  s.finite_support = true;
  return s;
}

SeriesStream stream_from_truncation(const GroupAlgebraElement& known, int radius,
                                    std::string name) {
  auto terms = std::make_shared<const GroupAlgebraElement>(known.truncated(radius));
  SeriesStream s;
  s.group = known.group();
  s.name = std::move(name);
  s.coefficient = [terms](const ReducedWord& w) { return terms->coefficient(w); };
  s.support_bound = [terms](int r) {
    std::vector<ReducedWord> out;
    for (const auto& [w, c] : terms->terms()) {
      if (static_cast<int>(w.length()) <= r) {
        out.push_back(w);
      }
    }
    return out;
  };
  s.max_radius = radius;
  return s;
}

SeriesStream one_variable_stream(Group group, std::string name,
                                 std::function<ExactComplex(long)> coefficient) {
  SeriesStream s;
  s.group = std::move(group);
  s.name = std::move(name);
  s.coefficient = [coefficient](const ReducedWord& w) -> ExactComplex {
    for (Letter l : w.letters()) {
      if (l != 1) {
        return {};
      }
    }
    return coefficient(static_cast<long>(w.length()));
  };
  s.support_bound = [](int r) {
    std::vector<ReducedWord> out;
    for (int n = 0; n <= r; ++n) {
      out.push_back(ReducedWord::from_reduced(std::vector<Letter>(n, 1)));
    }
    return out;
  };
  return s;
}

std::vector<std::size_t> RankProfile::diagonal() const {
  std::vector<std::size_t> d;
  for (int j = 0; j <= std::min(jmax, kmax); ++j) {
    d.push_back(rho[j][j]);
  }
  return d;
}

RankProfile windowed_profile(const SeriesStream& u, int jmax, int kmax, StarConvention conv) {
  check_radii(jmax, kmax);
  return profile_from(build_window(u, jmax, kmax, conv), jmax, kmax);
}

RankProfile windowed_profile_inv(const SeriesStream& u, int jmax, int kmax, StarConvention conv) {
  check_radii(jmax, kmax);
  return profile_from(build_window_inv(u, jmax, kmax, conv), jmax, kmax);
}

std::vector<std::size_t> diagonal_profile(const SeriesStream& u, int window, StarConvention conv) {
  check_radii(window, window);
  Window win = build_window(u, window, window, conv);
  std::vector<std::size_t> out;
  for (int j = 0; j <= window; ++j) {
    out.push_back(window_rank(win, j, j));
  }
  return out;
}

std::vector<std::size_t> hankel_rank_profile(const std::vector<ExactComplex>& coeffs, int order) {
  if (order < 1) {
    throw std::invalid_argument("Hankel order must be >= 1");
  }
  if (static_cast<int>(coeffs.size()) < 2 * order - 1) {
    throw InsufficientCoefficients("order " + std::to_string(order) + " needs " +
                                   std::to_string(2 * order - 1) + " coefficients, got " +
                                   std::to_string(coeffs.size()));
  }
  std::vector<std::size_t> ranks;
  for (int m = 1; m <= order; ++m) {
    ExactMatrix h(m, m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        h(i, j) = coeffs[i + j];
      }
    }
    ranks.push_back(rank(h));
  }
  return ranks;
}

Classification classify_ranks(std::vector<std::size_t> ranks, int plateau) {
  Classification c;
  c.plateau = plateau;
  c.window = static_cast<int>(ranks.size()) - 1;
  for (std::size_t i = 1; i < ranks.size(); ++i) {
    c.increments.push_back(static_cast<long>(ranks[i]) - static_cast<long>(ranks[i - 1]));
  }
  bool flat = static_cast<int>(c.increments.size()) >= plateau;
  for (int i = 0; flat && i < plateau; ++i) {
    flat = c.increments[c.increments.size() - 1 - i] == 0;
  }
  c.verdict = flat ? Verdict::Stabilized : Verdict::Growing;
  c.rank = ranks.empty() ? 0 : ranks.back();
  c.ranks = std::move(ranks);
  return c;
}

Classification classify(const SeriesStream& u, int window, int plateau, StarConvention conv) {
  if (plateau < 1 || window < plateau + 2) {
    throw std::invalid_argument("classify needs plateau >= 1 and window >= plateau + 2");
  }
  return classify_ranks(diagonal_profile(u, window, conv), plateau);
}

std::string verdict_name(Verdict v) { return v == Verdict::Stabilized ? "STABILIZED" : "GROWING"; }

} // namespace ratcrit
