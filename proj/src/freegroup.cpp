#include "ratcrit/freegroup.hpp"

#include "ratcrit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace ratcrit {

namespace {

bool valid_name(const std::string& name) {
  if (name.empty() || name == "i" || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) {
    return {};
  }
  auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

int letter_key(Letter l) { return 2 * std::abs(l) + (l < 0 ? 1 : 0); }

} // namespace

GeneratorSet::GeneratorSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw InvalidGenerator("generator set must have rank >= 1");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) {
      throw InvalidGenerator("invalid generator name '" + n + "'");
    }
    if (!seen.insert(n).second) {
      throw InvalidGenerator("duplicate generator name '" + n + "'");
    }
  }
}

int GeneratorSet::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? 0 : static_cast<int>(it - names_.begin()) + 1;
}

Group make_group(std::vector<std::string> names) {
  return std::make_shared<const GeneratorSet>(std::move(names));
}

Group parse_group(const std::string& text) {
  std::string body = trim(text);
  if (body.size() >= 3 && body.rfind("F(", 0) == 0 && body.back() == ')') {
    body = body.substr(2, body.size() - 3);
  }
  std::vector<std::string> names;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    names.push_back(trim(item));
  }
  return make_group(std::move(names));
}

bool same_group(const Group& a, const Group& b) { return a == b || (a && b && *a == *b); }

ReducedWord ReducedWord::from_reduced(std::vector<Letter> letters) {
  return ReducedWord(std::move(letters));
}

int ReducedWord::max_generator() const {
  int m = 0;
  for (Letter l : letters_) {
    m = std::max(m, std::abs(l));
  }
  return m;
}

std::strong_ordering operator<=>(const ReducedWord& a, const ReducedWord& b) {
  if (auto c = a.length() <=> b.length(); c != 0) {
    return c;
  }
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (auto c = letter_key(a.letters_[i]) <=> letter_key(b.letters_[i]); c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

ReducedWord reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0) {
      throw InvalidGenerator("letter 0 is not a generator");
    }
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return ReducedWord::from_reduced(std::move(out));
}

ReducedWord reduce(const GeneratorSet& gens, std::span<const Letter> letters) {
  for (Letter l : letters) {
    if (l == 0 || std::abs(l) > gens.rank()) {
      throw InvalidGenerator("letter " + std::to_string(l) + " outside generator set of rank " +
                             std::to_string(gens.rank()));
    }
  }
  return reduce(letters);
}

std::size_t cancellation_length(const ReducedWord& u, const ReducedWord& v) {
  const auto& a = u.letters();
  const auto& b = v.letters();
  std::size_t c = 0;
  while (c < a.size() && c < b.size() && a[a.size() - 1 - c] == -b[c]) {
    ++c;
  }
  return c;
}

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v) {
  std::size_t c = cancellation_length(u, v);
  std::vector<Letter> out(u.letters().begin(), u.letters().end() - static_cast<std::ptrdiff_t>(c));
  out.insert(out.end(), v.letters().begin() + static_cast<std::ptrdiff_t>(c), v.letters().end());
  return ReducedWord::from_reduced(std::move(out));
}

ReducedWord invert(const ReducedWord& g) {
  std::vector<Letter> out(g.letters().rbegin(), g.letters().rend());
  for (auto& l : out) {
    l = -l;
  }
  return ReducedWord::from_reduced(std::move(out));
}

EdgeOrStar::EdgeOrStar(Edge e) : edge_(std::move(e)) {
  if (edge_->gen <= 0) {
    throw InvalidGenerator("edges are stored with a positive generator");
  }
}

std::strong_ordering operator<=>(const EdgeOrStar& a, const EdgeOrStar& b) {
  return pi_inverse(a) <=> pi_inverse(b);
}

EdgeOrStar pi(const ReducedWord& g) {
  if (g.is_identity()) {
    return EdgeOrStar::star();
  }
  Letter l = g.last();
  if (l > 0) {
    std::vector<Letter> parent(g.letters().begin(), g.letters().end() - 1);
    return Edge{ReducedWord::from_reduced(std::move(parent)), l};
  }
  return Edge{g, -l};
}

ReducedWord pi_inverse(const EdgeOrStar& e) {
  if (e.is_star()) {
    return {};
  }
  const Edge& edge = e.edge();
  // The endpoint farther from the identity: base itself when base ends in
  // gen^-1 (then base*gen is its parent), otherwise base*gen.
  if (!edge.base.is_identity() && edge.base.last() == -edge.gen) {
    return edge.base;
  }
  std::vector<Letter> out = edge.base.letters();
  out.push_back(edge.gen);
  return ReducedWord::from_reduced(std::move(out));
}

std::optional<EdgeOrStar> act_edge(const ReducedWord& g, const EdgeOrStar& e, StarConvention conv) {
  if (e.is_star()) {
    if (conv == StarConvention::Zero && !g.is_identity()) {
      return std::nullopt;
    }
    return EdgeOrStar::star();
  }
  return EdgeOrStar(Edge{multiply(g, e.edge().base), e.edge().gen});
}

std::vector<ReducedWord> equivariance_failure_set(const ReducedWord& g) {
  std::vector<ReducedWord> out;
  const auto& l = g.letters();
  out.reserve(l.size() + 1);
  for (std::size_t start = 0; start <= l.size(); ++start) {
    std::vector<Letter> suffix(l.begin() + static_cast<std::ptrdiff_t>(start), l.end());
    out.push_back(invert(ReducedWord::from_reduced(std::move(suffix))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ReducedWord> ball(int rank, int radius) {
  std::vector<ReducedWord> out{ReducedWord{}};
  std::size_t layer_begin = 0;
  for (int r = 1; r <= radius; ++r) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      const ReducedWord w = out[i];
      for (int x = 1; x <= rank; ++x) {
        for (Letter l : {x, -x}) {
          if (!w.is_identity() && w.last() == -l) {
            continue;
          }
          std::vector<Letter> next = w.letters();
          next.push_back(l);
          out.push_back(ReducedWord::from_reduced(std::move(next)));
        }
      }
    }
    layer_begin = layer_end;
  }
  // Appending in letter order per parent already yields length-lex order.
  return out;
}

std::vector<ReducedWord> neighbours(const ReducedWord& w, int rank) {
  std::vector<ReducedWord> out;
  for (int x = 1; x <= rank; ++x) {
    for (Letter l : {x, -x}) {
      out.push_back(multiply(w, ReducedWord::generator(l)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_word(const GeneratorSet& gens, const ReducedWord& w) {
  if (w.is_identity()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i > 0) {
      out += '*';
    }
    Letter l = w.letters()[i];
    out += gens.name(std::abs(l));
    if (l < 0) {
      out += "^-1";
    }
  }
  return out;
}

std::string format_edge(const GeneratorSet& gens, const EdgeOrStar& e) {
  if (e.is_star()) {
    return "*";
  }
  return "(" + format_word(gens, e.edge().base) + ", " + gens.name(e.edge().gen) + ")";
}

ReducedWord parse_word(const GeneratorSet& gens, const std::string& text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  std::stringstream ss(text);
  std::string token;
  bool any = false;
  while (std::getline(ss, token, '*')) {
    any = true;
    std::string t = trim(token);
    if (t == "1") {
      pos += token.size() + 1;
      continue;
    }
    bool inverse = false;
    if (t.size() > 3 && t.compare(t.size() - 3, 3, "^-1") == 0) {
      inverse = true;
      t = trim(t.substr(0, t.size() - 3));
    }
    int idx = gens.index_of(t);
    if (idx == 0) {
      throw ParseError("unknown generator '" + t + "'", pos);
    }
    letters.push_back(inverse ? -idx : idx);
    pos += token.size() + 1;
  }
  if (!any) {
    throw ParseError("empty word", 0);
  }
  return reduce(gens, letters);
}

} // namespace ratcrit
