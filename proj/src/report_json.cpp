#include "ratcrit/report_json.hpp"

#include "ratcrit/errors.hpp"

#include <cstdio>

namespace ratcrit {

namespace {

Json labels(const GeneratorSet& gens, const std::vector<Label>& ls) {
  Json out = Json::array();
  for (const auto& l : ls) {
    out.push_back(format_label(gens, l));
  }
  return out;
}

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

std::string convention_name(StarConvention c) {
  return c == StarConvention::Zero ? "zero" : "unital";
}

Json to_json(const ExactComplex& z) {
  return Json::array({rational_string(z.re()), rational_string(z.im())});
}

ExactComplex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError("expected [re, im]", 0);
  }
  return ExactComplex::from_strings(j[0].get<std::string>(), j[1].get<std::string>());
}

Json to_json(const DefectMatrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.entries.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.entries.cols(); ++c) {
      row.push_back(to_json(m.entries(r, c)));
    }
    entries.push_back(std::move(row));
  }
  Json out;
  out["rows"] = labels(*m.group, m.rows);
  out["cols"] = labels(*m.group, m.cols);
  out["entries"] = std::move(entries);
  return out;
}

DefectMatrix defect_matrix_from_json(const Group& group, const Json& j) {
  DefectMatrix m;
  m.group = group;
  try {
    for (const auto& l : j.at("rows")) m.rows.push_back(parse_label(*group, l.get<std::string>()));
    for (const auto& l : j.at("cols")) m.cols.push_back(parse_label(*group, l.get<std::string>()));
    const Json& e = j.at("entries");
    if (e.size() != m.rows.size()) {
      throw ParseError("entries have the wrong number of rows", 0);
    }
    m.entries = ExactMatrix(m.rows.size(), m.cols.size());
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
      if (e[r].size() != m.cols.size()) {
        throw ParseError("entries have the wrong number of columns", 0);
      }
      for (std::size_t c = 0; c < m.cols.size(); ++c) {
        m.entries(r, c) = complex_from_json(e[r][c]);
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed defect matrix: ") + ex.what(), 0);
  }
  return m;
}

Json to_json(const CriterionReport& r) {
  const GeneratorSet& gens = *r.p_matrix.group;
  Json out;
  out["identity_holds"] = r.identity_holds;
  out["star_convention"] = convention_name(r.convention);
  out["rank_P"] = r.rank_P;
  out["rank_P_inv"] = r.rank_P_inv;
  out["rank_F"] = r.rank_F;
  out["certified"] = r.certified;
  out["witness_P"] = labels(gens, r.witness_P);
  out["witness_P_inv"] = labels(gens, r.witness_P_inv);
  out["P_defect"] = to_json(r.p_matrix);
  out["P_inv_defect"] = to_json(r.p_inv_matrix);
  return out;
}

Json to_json(const RankProfile& p) {
  Json out;
  out["jmax"] = p.jmax;
  out["kmax"] = p.kmax;
  out["rho"] = p.rho;
  return out;
}

Json to_json(const Classification& c) {
  Json out;
  out["verdict"] = verdict_name(c.verdict);
  if (c.verdict == Verdict::Stabilized) {
    out["rank"] = c.rank;
  }
  out["window"] = c.window;
  out["plateau"] = c.plateau;
  out["diagonal"] = c.ranks;
  out["increments"] = c.increments;
  out["semi_decision"] = true;
  return out;
}

Json to_json(const GeneratorSet& gens, const SeriesTruncation& t) {
  Json coeffs = Json::array();
  if (t.mode == ExpansionMode::Exact) {
    for (const auto& [w, c] : t.exact->terms()) {
      coeffs.push_back({{"word", format_word(gens, w)},
                        {"re", rational_string(c.re())},
                        {"im", rational_string(c.im())}});
    }
  } else {
    for (const auto& [w, c] : t.numeric) {
      coeffs.push_back(
          {{"word", format_word(gens, w)}, {"re", decimal(c.real())}, {"im", decimal(c.imag())}});
    }
  }
  Json out;
  out["coeffs"] = std::move(coeffs);
  out["radius"] = t.radius;
  if (t.mode == ExpansionMode::Numeric) {
    out["tail_bound"] = t.tail_bound;
    out["dominance_ratios"] = t.dominance_ratios;
  }
  return out;
}

SeriesStream stream_from_json(const Group& group, const Json& j, std::string name) {
  GroupAlgebraElement known(group);
  int radius = 0;
  try {
    radius = j.at("radius").get<int>();
    for (const auto& c : j.at("coeffs")) {
      ReducedWord w = parse_word(*group, c.at("word").get<std::string>());
      if (static_cast<int>(w.length()) > radius) {
        throw ParseError("coefficient word '" + c.at("word").get<std::string>() +
                             "' is longer than the declared radius",
                         0);
      }
      const std::string im = c.contains("im") ? c.at("im").get<std::string>() : "0";
      known.add_term(w, ExactComplex::from_strings(c.at("re").get<std::string>(), im));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed stream: ") + ex.what(), 0);
  }
  if (radius < 0) {
    throw ParseError("radius must be nonnegative", 0);
  }
  return stream_from_truncation(known, radius, std::move(name));
}

} // namespace ratcrit
