// Command-line front end: rank reports, quadruple checks, profiles, Hankel
// ranks and expansions.
//
// Exit codes: 0 ok, 2 parse error, 3 configuration error, 4 identity
// violation, 5 truncated stream, 6 expansion failure.

#include "ratcrit/errors.hpp"
#include "ratcrit/expression.hpp"
#include "ratcrit/families.hpp"
#include "ratcrit/rational.hpp"
#include "ratcrit/report_json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace ratcrit;

namespace {

enum Exit { kOk = 0, kParse = 2, kConfig = 3, kIdentity = 4, kTruncated = 5, kExpansion = 6 };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string group;
  std::string convention = "zero";
  std::string format = "text";
  unsigned long seed = 0;
};

Group group_for(const Globals& g, const char* fallback) {
  try {
    return parse_group(g.group.empty() ? fallback : g.group);
  } catch (const Error& e) {
    throw ConfigError(std::string("bad --group: ") + e.what());
  }
}

StarConvention convention_of(const Globals& g) {
  return g.convention == "unital" ? StarConvention::Unital : StarConvention::Zero;
}

std::string join(const GeneratorSet& gens, const std::vector<Label>& ls) {
  std::string out;
  for (const auto& l : ls) {
    out += (out.empty() ? "" : ", ") + format_label(gens, l);
  }
  return out.empty() ? "(none)" : out;
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

void print_report(const CriterionReport& r, bool json) {
  if (json) {
    std::cout << to_json(r).dump(2) << "\n";
    return;
  }
  const GeneratorSet& gens = *r.p_matrix.group;
  std::cout << "star convention: " << convention_name(r.convention) << "\n"
            << "identity a*t = s*b: " << (r.identity_holds ? "holds" : "fails") << "\n"
            << "rank_P:     " << r.rank_P << "\n"
            << "rank_P_inv: " << r.rank_P_inv << "\n"
            << "rank_F:     " << r.rank_F << "\n"
            << "certified:  " << (r.certified ? "yes" : "no") << "\n"
            << "witness_P:     " << join(gens, r.witness_P) << "\n"
            << "witness_P_inv: " << join(gens, r.witness_P_inv) << "\n";
}

SeriesStream load_series(const Group& group, const std::string& spec, int radius) {
  if (spec.rfind("expr:", 0) == 0) {
    return stream_from_expression(parse_expression(group, spec.substr(5)), radius);
  }
  if (spec.rfind("file:", 0) == 0 || spec.ends_with(".json")) {
    const std::string path = spec.rfind("file:", 0) == 0 ? spec.substr(5) : spec;
    std::ifstream in(path);
    if (!in) {
      throw ConfigError("cannot open stream file '" + path + "'");
    }
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("stream file is not JSON: ") + e.what(), 0);
    }
    return stream_from_json(group, j, path);
  }
  return make_family(group, spec);
}

int cmd_commutator_rank(const Globals& g, const std::string& elem) {
  Group group = group_for(g, "F(x,y)");
  GroupAlgebraElement a = parse_group_algebra(group, elem);
  GroupAlgebraElement one = GroupAlgebraElement::scalar(group, 1);
  print_report(check_criterion(make_quadruple(a, a, one, one), convention_of(g)),
               g.format == "json");
  return kOk;
}

int cmd_check_quadruple(const Globals& g, const std::vector<std::string>& abst,
                        const std::string& expr) {
  Group group = group_for(g, expr.empty() ? "F(x,y)" : "F(x)");
  const bool json = g.format == "json";
  std::optional<Quadruple> q;
  if (!expr.empty()) {
    q = quadruple_from_expression(parse_expression(group, expr));
  } else {
    if (abst.size() != 4) {
      throw ConfigError("check-quadruple needs --a --b --s --t, or --expr");
    }
    std::vector<GroupAlgebraElement> v;
    for (const auto& s : abst) v.push_back(parse_group_algebra(group, s));
    try {
      q = make_quadruple(v[0], v[1], v[2], v[3]);
    } catch (const IdentityViolation& e) {
      if (json) {
        Json out{{"identity_holds", false}, {"residual", e.residual()}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "identity a*t = s*b: fails\nresidual a*t - s*b: " << e.residual() << "\n";
      }
      return kIdentity;
    }
  }
  if (!expr.empty() && !json) {
    std::cout << "a = b: " << q->a().to_string() << "\ns = t: " << q->s().to_string() << "\n";
  }
  CriterionReport r = check_criterion(*q, convention_of(g));
  if (!expr.empty() && json) {
    Json out = to_json(r);
    out["quadruple"] = {{"a", q->a().to_string()},
                        {"b", q->b().to_string()},
                        {"s", q->s().to_string()},
                        {"t", q->t().to_string()}};
    std::cout << out.dump(2) << "\n";
  } else {
    print_report(r, json);
  }
  return kOk;
}

int cmd_profile(const Globals& g, const std::string& spec, int window, int plateau,
                bool inverse_side) {
  if (window < plateau + 2) {
    throw ConfigError("--window must be at least --plateau + 2");
  }
  Group group = group_for(g, "F(x)");
  SeriesStream u = load_series(group, spec, 2 * window + 1);
  const StarConvention conv = convention_of(g);
  RankProfile p = inverse_side ? windowed_profile_inv(u, window, window, conv)
                               : windowed_profile(u, window, window, conv);
  Classification c = classify_ranks(p.diagonal(), plateau);
  c.window = window;
  if (g.format == "json") {
    Json out;
    out["series"] = spec;
    out["side"] = inverse_side ? "P_inv" : "P";
    out["star_convention"] = convention_name(conv);
    out["profile"] = to_json(p);
    out["classification"] = to_json(c);
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "series: " << spec << "  side: " << (inverse_side ? "P^-1" : "P")
            << "  star convention: " << convention_name(conv) << "\n";
  std::cout << "rho(j, k)   rows j = 0.." << window << ", columns k = 0.." << window << "\n";
  std::cout << "  j\\k";
  for (int k = 0; k <= window; ++k) std::cout << std::setw(4) << k;
  std::cout << "\n";
  for (int j = 0; j <= window; ++j) {
    std::cout << std::setw(5) << j;
    for (int k = 0; k <= window; ++k) std::cout << std::setw(4) << p.at(j, k);
    std::cout << "\n";
  }
  std::cout << "diagonal: " << join(c.ranks) << "\n";
  std::cout << "verdict: " << verdict_name(c.verdict);
  if (c.verdict == Verdict::Stabilized) std::cout << "(" << c.rank << ")";
  std::cout << "  [semi-decision; window " << window << ", plateau " << plateau << "]\n";
  return kOk;
}

int cmd_hankel(const Globals& g, const std::string& spec, int order) {
  if (order < 1) {
    throw ConfigError("--order must be positive");
  }
  Group group = group_for(g, "F(x)");
  SeriesStream u = load_series(group, spec, 2 * order - 2);
  std::vector<std::size_t> ranks = hankel_rank_profile(power_coefficients(u, 2 * order - 1), order);
  if (g.format == "json") {
    Json out{{"series", spec}, {"order", order}, {"ranks", ranks}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "hankel ranks (m = 1.." << order << "): " << join(ranks) << "\n";
  }
  return kOk;
}

int cmd_expand(const Globals& g, const std::string& text, int radius, bool numeric, double tol) {
  Group group = group_for(g, "F(x,y)");
  RationalExpression e = parse_expression(group, text);
  SeriesTruncation t = numeric ? expand_numeric(e, tol) : expand_exact(e, radius);
  if (g.format == "json") {
    std::cout << to_json(*group, t).dump(2) << "\n";
    return kOk;
  }
  if (numeric) {
    for (const auto& [w, c] : t.numeric) {
      std::cout << format_word(*group, w) << "\t" << std::setprecision(17) << c.real();
      if (c.imag() != 0.0) std::cout << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "i";
      std::cout << "\n";
    }
    std::cout << "l1 error bound: " << t.tail_bound << "\n";
  } else {
    for (const auto& [w, c] : t.exact->terms()) {
      std::cout << format_word(*group, w) << "\t" << c.to_string() << "\n";
    }
    std::cout << "radius: " << t.radius << "\n";
  }
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact defect ranks for operators over free groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--group", g.group, "free group, e.g. \"F(x,y)\"");
  app.add_option("--star-convention", g.convention, "action of G on the * summand")
      ->check(CLI::IsMember({"zero", "unital"}));
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "seed for randomized suites");

  std::string elem;
  auto* cr = app.add_subcommand("commutator-rank", "rank of [P, a] and the full report");
  cr->add_option("--elem", elem, "group-algebra element")->required();

  std::vector<std::string> abst(4);
  std::string qexpr;
  auto* cq = app.add_subcommand("check-quadruple", "verify a*t = s*b and report defect ranks");
  auto* oa = cq->add_option("--a", abst[0]);
  auto* ob = cq->add_option("--b", abst[1]);
  auto* os = cq->add_option("--s", abst[2]);
  auto* ot = cq->add_option("--t", abst[3]);
  auto* oe = cq->add_option("--expr", qexpr, "rank-1 rational expression");
  for (auto* o : {oa, ob, os, ot}) {
    o->excludes(oe);
  }

  std::string series;
  int window = 10;
  int plateau = 4;
  bool inverse_side = false;
  auto* pr = app.add_subcommand("profile", "windowed defect-rank profile of a series");
  pr->add_option("--series", series, "family name, expr:<expression> or a JSON stream file")
      ->required();
  pr->add_option("--window", window)->check(CLI::NonNegativeNumber);
  pr->add_option("--plateau", plateau)->check(CLI::PositiveNumber);
  pr->add_flag("--inverse-side", inverse_side, "profile P^-1 u - u P^-1 instead");

  std::string family;
  int order = 6;
  auto* hk = app.add_subcommand("hankel", "Hankel rank profile of a one-variable series");
  hk->add_option("--family,--series", family)->required();
  hk->add_option("--order", order);

  std::string expr;
  int radius = 3;
  bool numeric = false;
  double tol = 1e-9;
  auto* ex = app.add_subcommand("expand", "truncated expansion of a rational expression");
  ex->add_option("--expr", expr)->required();
  ex->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
  ex->add_flag("--numeric", numeric, "floating-point expansion with certified l1 error");
  ex->add_option("--tol", tol)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    if (*cr) return cmd_commutator_rank(g, elem);
    if (*cq) {
      if (!qexpr.empty()) return cmd_check_quadruple(g, {}, qexpr);
      for (const auto& s : abst) {
        if (s.empty()) throw ConfigError("check-quadruple needs --a --b --s --t, or --expr");
      }
      return cmd_check_quadruple(g, abst, "");
    }
    if (*pr) return cmd_profile(g, series, window, plateau, inverse_side);
    if (*hk) return cmd_hankel(g, family, order);
    if (*ex) return cmd_expand(g, expr, radius, numeric, tol);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const NotInGroupAlgebra& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidGenerator& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ZeroDenominator& e) {
    std::cerr << "invalid quadruple: " << e.what() << "\n";
    return kIdentity;
  } catch (const StreamTruncated& e) {
    std::cerr << "stream truncated: " << e.what() << "\n";
    return kTruncated;
  } catch (const InsufficientCoefficients& e) {
    std::cerr << "stream truncated: " << e.what() << "\n";
    return kTruncated;
  } catch (const NotExpandable& e) {
    std::cerr << "not expandable: " << e.what() << "\n";
    return kExpansion;
  } catch (const SingularConstantTerm& e) {
    std::cerr << "singular constant term: " << e.what() << "\n";
    return kExpansion;
  } catch (const DominanceFailure& e) {
    std::cerr << "dominance failure: " << e.what() << "\n";
    return kExpansion;
  } catch (const RankUnsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExpansion;
  } catch (const DivisionByZeroPolynomial& e) {
    std::cerr << "division by zero: " << e.what() << "\n";
    return kExpansion;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }
  return kOk;
}
