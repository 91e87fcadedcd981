#ifndef RATCRIT_REPORT_JSON_HPP
#define RATCRIT_REPORT_JSON_HPP

#include "ratcrit/criterion.hpp"
#include "ratcrit/rational.hpp"

#include <json.hpp>

namespace ratcrit {

using Json = nlohmann::ordered_json;

/// [re, im] with "p/q" strings.
Json to_json(const ExactComplex& z);
ExactComplex complex_from_json(const Json& j);

/// {"rows": [...], "cols": [...], "entries": [[[re, im], ...], ...]}
Json to_json(const DefectMatrix& m);
DefectMatrix defect_matrix_from_json(const Group& group, const Json& j);

Json to_json(const CriterionReport& r);
Json to_json(const RankProfile& p);
Json to_json(const Classification& c);
/// {"coeffs": [{"word", "re", "im"}], "radius": N}; numeric mode stores
/// decimal strings and adds "tail_bound".
Json to_json(const GeneratorSet& gens, const SeriesTruncation& t);

/// Stream with the listed coefficients, served up to "radius".
SeriesStream stream_from_json(const Group& group, const Json& j, std::string name = "json");

std::string convention_name(StarConvention c);

} // namespace ratcrit

#endif
