#ifndef RATCRIT_FREEGROUP_HPP
#define RATCRIT_FREEGROUP_HPP

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ratcrit {

/// Names of the free generators. Generator k (1-based) is written as the
/// signed letter +k, its inverse as -k.
class GeneratorSet {
public:
  explicit GeneratorSet(std::vector<std::string> names);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const { return names_.at(index - 1); }
  const std::vector<std::string>& names() const { return names_; }
  /// 1-based index, or 0 when the name is unknown.
  int index_of(const std::string& name) const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
  std::vector<std::string> names_;
};

using Group = std::shared_ptr<const GeneratorSet>;

Group make_group(std::vector<std::string> names);
/// Accepts "F(x,y)" or a bare comma list "x,y".
Group parse_group(const std::string& text);
bool same_group(const Group& a, const Group& b);

using Letter = int;

/// Freely reduced word. The empty word is the identity.
class ReducedWord {
public:
  ReducedWord() = default;

  /// Caller guarantees the letters are already reduced and nonzero.
  static ReducedWord from_reduced(std::vector<Letter> letters);
  static ReducedWord generator(int index) { return from_reduced({index}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  Letter last() const { return letters_.back(); }
  Letter first() const { return letters_.front(); }
  /// Largest generator index used, 0 for the identity.
  int max_generator() const;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  /// Length-lex order; letters compare as x < x^-1 < y < y^-1 < ...
  friend std::strong_ordering operator<=>(const ReducedWord& a, const ReducedWord& b);

private:
  explicit ReducedWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence. Throws InvalidGenerator
/// for 0 or indices beyond the group's rank.
ReducedWord reduce(const GeneratorSet& gens, std::span<const Letter> letters);
ReducedWord reduce(std::span<const Letter> letters);

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v);
ReducedWord invert(const ReducedWord& g);
/// Length of the longest t with u ending in t and v beginning with t^-1,
/// so |uv| = |u| + |v| - 2c.
std::size_t cancellation_length(const ReducedWord& u, const ReducedWord& v);

/// Cayley-tree edge {base, base*x}; gen is always the positive index x.
struct Edge {
  ReducedWord base;
  int gen = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class EdgeOrStar {
public:
  EdgeOrStar() = default; // the distinguished point *
  EdgeOrStar(Edge e);

  static EdgeOrStar star() { return {}; }
  bool is_star() const { return !edge_.has_value(); }
  const Edge& edge() const { return *edge_; }

  friend bool operator==(const EdgeOrStar&, const EdgeOrStar&) = default;
  /// Orders by the preimage under pi, so * comes first.
  friend std::strong_ordering operator<=>(const EdgeOrStar& a, const EdgeOrStar& b);

private:
  std::optional<Edge> edge_;
};

/// How group elements act on the extra point *.
enum class StarConvention {
  Zero,  ///< g* = 0 for every g != 1; the identity (and scalars) act as usual
  Unital ///< g* = * (trivial representation on the extra summand)
};

/// Terminal-edge bijection G -> E u {*}: the identity goes to *, any other g
/// to the edge joining g to its neighbour one step closer to the identity.
EdgeOrStar pi(const ReducedWord& g);
ReducedWord pi_inverse(const EdgeOrStar& e);

/// g.Edge(h, x) = Edge(gh, x). The result is nullopt (zero) when g != 1 acts
/// on * under StarConvention::Zero.
std::optional<EdgeOrStar> act_edge(const ReducedWord& g, const EdgeOrStar& e,
                                   StarConvention conv = StarConvention::Zero);

/// { s^-1 : s a suffix of g }, the elements b with pi(gb) possibly != g.pi(b).
/// Sorted length-lex; always contains the identity; size |g| + 1.
std::vector<ReducedWord> equivariance_failure_set(const ReducedWord& g);

/// All reduced words of length <= radius, length-lex.
std::vector<ReducedWord> ball(int rank, int radius);
/// Words w*l for each letter l (Cayley-graph neighbours), length-lex.
std::vector<ReducedWord> neighbours(const ReducedWord& w, int rank);

std::string format_word(const GeneratorSet& gens, const ReducedWord& w);
std::string format_edge(const GeneratorSet& gens, const EdgeOrStar& e);
/// Parses "x*y^-1*x" (or "1"); the result is reduced.
ReducedWord parse_word(const GeneratorSet& gens, const std::string& text);

} // namespace ratcrit

#endif
