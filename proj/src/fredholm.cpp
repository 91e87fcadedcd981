#include "ratcrit/fredholm.hpp"

#include "ratcrit/errors.hpp"

#include <algorithm>
#include <set>

namespace ratcrit {

namespace {

void require_same(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                  const GroupAlgebraElement& s, const GroupAlgebraElement& t) {
  if (!same_group(a.group(), b.group()) || !same_group(a.group(), s.group()) ||
      !same_group(a.group(), t.group())) {
    throw GeneratorMismatch();
  }
}

template <class RowKey>
DefectMatrix assemble(const Group& group, const std::vector<Label>& cols,
                      const std::vector<SparseVector<RowKey>>& columns) {
  std::set<RowKey> row_keys;
  for (const auto& col : columns) {
    for (const auto& [k, v] : col.entries()) {
      row_keys.insert(k);
    }
  }
  DefectMatrix m;
  m.group = group;
  m.cols = cols;
  std::map<RowKey, std::size_t> row_index;
  for (const auto& k : row_keys) {
    row_index.emplace(k, m.rows.size());
    m.rows.emplace_back(k);
  }
  m.entries = ExactMatrix(m.rows.size(), m.cols.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [k, v] : columns[j].entries()) {
      m.entries(row_index.at(k), j) = v;
    }
  }
  return m;
}

std::vector<ReducedWord> boundary_of(const std::vector<ReducedWord>& support, int rank) {
  std::set<ReducedWord> inside(support.begin(), support.end());
  std::set<ReducedWord> ring;
  for (const auto& w : support) {
    for (auto& n : neighbours(w, rank)) {
      if (!inside.count(n)) {
        ring.insert(std::move(n));
      }
    }
  }
  return {ring.begin(), ring.end()};
}

} // namespace

std::string format_label(const GeneratorSet& gens, const Label& l) {
  if (const auto* w = std::get_if<ReducedWord>(&l)) {
    return format_word(gens, *w);
  }
  return format_edge(gens, std::get<EdgeOrStar>(l));
}

Label parse_label(const GeneratorSet& gens, const std::string& text) {
  if (text == "*") {
    return EdgeOrStar::star();
  }
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    auto comma = text.rfind(',');
    if (comma == std::string::npos) {
      throw ParseError("edge label needs a comma", 0);
    }
    ReducedWord base = parse_word(gens, text.substr(1, comma - 1));
    std::string gen = text.substr(comma + 1, text.size() - comma - 2);
    gen.erase(0, gen.find_first_not_of(' '));
    int idx = gens.index_of(gen);
    if (idx == 0) {
      throw ParseError("unknown generator '" + gen + "' in edge label", comma + 1);
    }
    return EdgeOrStar(Edge{base, idx});
  }
  return parse_word(gens, text);
}

SparseMatrix DefectMatrix::sparse() const {
  SparseMatrix out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!entries(i, j).is_zero()) {
        out.emplace(std::make_pair(rows[i], cols[j]), entries(i, j));
      }
    }
  }
  return out;
}

DefectMatrix DefectMatrix::conj_transpose() const {
  DefectMatrix t;
  t.group = group;
  t.rows = cols;
  t.cols = rows;
  t.entries = entries.conj_transpose();
  t.boundary_zero = boundary_zero;
  return t;
}

std::vector<Label> DefectMatrix::witness_columns() const {
  std::vector<Label> out;
  for (std::size_t c : rank_result().pivot_columns) {
    out.push_back(cols[c]);
  }
  return out;
}

std::size_t rank(const DefectMatrix& m) { return rank(m.entries); }

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out = a;
  for (const auto& [k, v] : b) {
    auto [it, inserted] = out.try_emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) {
        out.erase(it);
      }
    }
  }
  return out;
}

SparseMatrix operator-(const SparseMatrix& a) {
  SparseMatrix out;
  for (const auto& [k, v] : a) {
    out.emplace(k, -v);
  }
  return out;
}

DefectMatrix FBlockMatrix::assembled() const {
  DefectMatrix m;
  m.group = p_block.group;
  // Row space L^2(G) + (L^2(E) + C): the P^-1 block lands in L^2(G), the P
  // block in L^2(E) + C. Columns are ordered the same way.
  m.rows = p_inv_block.rows;
  m.rows.insert(m.rows.end(), p_block.rows.begin(), p_block.rows.end());
  m.cols = p_block.cols;
  m.cols.insert(m.cols.end(), p_inv_block.cols.begin(), p_inv_block.cols.end());
  m.entries = ExactMatrix(m.rows.size(), m.cols.size());
  const std::size_t g_rows = p_inv_block.rows.size();
  const std::size_t g_cols = p_block.cols.size();
  for (std::size_t i = 0; i < p_inv_block.rows.size(); ++i) {
    for (std::size_t j = 0; j < p_inv_block.cols.size(); ++j) {
      m.entries(i, g_cols + j) = p_inv_block.entries(i, j);
    }
  }
  for (std::size_t i = 0; i < p_block.rows.size(); ++i) {
    for (std::size_t j = 0; j < p_block.cols.size(); ++j) {
      m.entries(g_rows + i, j) = p_block.entries(i, j);
    }
  }
  m.boundary_zero = p_block.boundary_zero && p_inv_block.boundary_zero;
  return m;
}

std::size_t rank(const FBlockMatrix& f) { return rank(f.assembled()); }

EVector apply_P(const GVector& v) {
  EVector out;
  for (const auto& [g, c] : v.entries()) {
    out.add(pi(g), c);
  }
  return out;
}

GVector apply_P_inv(const EVector& w) {
  GVector out;
  for (const auto& [e, c] : w.entries()) {
    out.add(pi_inverse(e), c);
  }
  return out;
}

EVector defect_column(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                      const GroupAlgebraElement& s, const GroupAlgebraElement& t,
                      const ReducedWord& g, StarConvention conv) {
  GVector v = GVector::basis(g);
  return act_on_E(s, apply_P(act_on_G(b, v)), conv) - act_on_E(a, apply_P(act_on_G(t, v)), conv);
}

GVector defect_inv_column(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                          const GroupAlgebraElement& s, const GroupAlgebraElement& t,
                          const EdgeOrStar& e, StarConvention conv) {
  EVector w = EVector::basis(e);
  return act_on_G(s, apply_P_inv(act_on_E(b, w, conv))) -
         act_on_G(a, apply_P_inv(act_on_E(t, w, conv)));
}

std::vector<ReducedWord> defect_column_support(const GroupAlgebraElement& b,
                                               const GroupAlgebraElement& t) {
  std::set<ReducedWord> support{ReducedWord{}};
  for (const auto* elem : {&b, &t}) {
    for (const auto& [h, c] : elem->terms()) {
      for (auto& w : equivariance_failure_set(h)) {
        support.insert(std::move(w));
      }
    }
  }
  return {support.begin(), support.end()};
}

DefectMatrix defect_matrix(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                           const GroupAlgebraElement& s, const GroupAlgebraElement& t,
                           StarConvention conv) {
  require_same(a, b, s, t);
  const auto support = defect_column_support(b, t);
  std::vector<Label> cols(support.begin(), support.end());
  std::vector<EVector> columns;
  columns.reserve(support.size());
  for (const auto& g : support) {
    columns.push_back(defect_column(a, b, s, t, g, conv));
  }
  DefectMatrix m = assemble(a.group(), cols, columns);
  for (const auto& g : boundary_of(support, a.group()->rank())) {
    m.boundary.emplace_back(g);
    if (!defect_column(a, b, s, t, g, conv).is_zero()) {
      m.boundary_zero = false;
    }
  }
  return m;
}

DefectMatrix defect_matrix_inv(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                               const GroupAlgebraElement& s, const GroupAlgebraElement& t,
                               StarConvention conv) {
  require_same(a, b, s, t);
  const auto support = defect_column_support(b, t);
  std::vector<Label> cols;
  std::vector<GVector> columns;
  std::vector<EdgeOrStar> edges;
  for (const auto& g : support) {
    edges.push_back(pi(g));
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& e : edges) {
    cols.emplace_back(e);
    columns.push_back(defect_inv_column(a, b, s, t, e, conv));
  }
  DefectMatrix m = assemble(a.group(), cols, columns);
  for (const auto& g : boundary_of(support, a.group()->rank())) {
    EdgeOrStar e = pi(g);
    m.boundary.emplace_back(e);
    if (!defect_inv_column(a, b, s, t, e, conv).is_zero()) {
      m.boundary_zero = false;
    }
  }
  return m;
}

FBlockMatrix f_defect(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                      const GroupAlgebraElement& s, const GroupAlgebraElement& t,
                      StarConvention conv) {
  return {defect_matrix(a, b, s, t, conv), defect_matrix_inv(a, b, s, t, conv)};
}

} // namespace ratcrit
