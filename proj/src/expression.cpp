#include "ratcrit/expression.hpp"

#include "ratcrit/errors.hpp"

#include <cctype>
#include <vector>

namespace ratcrit {

namespace {

ExprPtr new_node(ExprKind kind, const Group& group, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
  return std::make_shared<const ExprNode>(ExprNode{kind, group, std::nullopt, {}, std::move(lhs),
                                                   std::move(rhs)});
}

const ReducedWord kIdentity{};

bool scalar_leaf(const ExprNode& n) {
  if (n.kind != ExprKind::Leaf) {
    return false;
  }
  const auto& terms = n.leaf->terms();
  return terms.empty() || (terms.size() == 1 && terms.begin()->first.is_identity());
}

ExactComplex scalar_value(const ExprNode& n) { return n.leaf->coefficient(kIdentity); }

bool nodes_equal(const ExprNode& a, const ExprNode& b) {
  if (a.kind != b.kind) {
    return false;
  }
  switch (a.kind) {
  case ExprKind::Leaf:
    return *a.leaf == *b.leaf;
  case ExprKind::ScalarMul:
    return a.scalar == b.scalar && nodes_equal(*a.lhs, *b.lhs);
  case ExprKind::Add:
  case ExprKind::Mul:
    return nodes_equal(*a.lhs, *b.lhs) && nodes_equal(*a.rhs, *b.rhs);
  default:
    return nodes_equal(*a.lhs, *b.lhs);
  }
}

// Printing precedence: 0 sum level, 1 product level, 2 atom/postfix level.
struct Printed {
  std::string text;
  int level;
};

Printed print_scalar(const ExactComplex& c) {
  if (c.is_real()) {
    if (sgn(c.re()) < 0) {
      return {c.to_string(), 0};
    }
    return {c.to_string(), c.re().get_den() == 1 ? 2 : 1};
  }
  if (sgn(c.re()) == 0) {
    if (sgn(c.im()) < 0) {
      return {c.to_string(), 0};
    }
    return {c.to_string(), c.im() == 1 ? 2 : 1};
  }
  return {c.to_string(), 0};
}

std::string wrap(const Printed& p, int min_level) {
  return p.level < min_level ? "(" + p.text + ")" : p.text;
}

Printed print(const ExprNode& n) {
  switch (n.kind) {
  case ExprKind::Leaf: {
    if (scalar_leaf(n)) {
      return print_scalar(scalar_value(n));
    }
    const auto& terms = n.leaf->terms();
    if (terms.size() == 1 && terms.begin()->second == ExactComplex(1) &&
        terms.begin()->first.length() == 1 && terms.begin()->first.first() > 0) {
      return {n.group->name(terms.begin()->first.first()), 2};
    }
    return {"(" + n.leaf->to_string() + ")", 2};
  }
  case ExprKind::Add: {
    std::string lhs = wrap(print(*n.lhs), 0);
    if (n.rhs->kind == ExprKind::Neg) {
      return {lhs + " - " + wrap(print(*n.rhs->lhs), 1), 0};
    }
    return {lhs + " + " + wrap(print(*n.rhs), 1), 0};
  }
  case ExprKind::Neg:
    return {"-" + wrap(print(*n.lhs), 1), 0};
  case ExprKind::Mul:
    return {wrap(print(*n.lhs), 1) + "*" + wrap(print(*n.rhs), 2), 1};
  case ExprKind::ScalarMul: {
    Printed c = print_scalar(n.scalar);
    return {wrap(c, 1) + "*" + wrap(print(*n.lhs), 2), 1};
  }
  case ExprKind::Inv:
    return {wrap(print(*n.lhs), 2) + "^-1", 2};
  case ExprKind::Adjoint:
    return {wrap(print(*n.lhs), 2) + "^*", 2};
  }
  return {"", 0};
}

std::size_t count(const ExprNode& n) {
  std::size_t c = 1;
  if (n.lhs) {
    c += count(*n.lhs);
  }
  if (n.rhs) {
    c += count(*n.rhs);
  }
  return c;
}

// ---------------------------------------------------------------- parser

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
  bool imaginary = false; // digits immediately followed by 'i'
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
      }
      Token t{Tok::Number, s.substr(start, i - start), start};
      if (i < s.size() && s[i] == 'i' &&
          (i + 1 == s.size() || !std::isalnum(static_cast<unsigned char>(s[i + 1])))) {
        t.imaginary = true;
        ++i;
      }
      out.push_back(t);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        ++i;
      }
      out.push_back({Tok::Ident, s.substr(start, i - start), start});
      continue;
    }
    Tok k;
    switch (c) {
    case '+': k = Tok::Plus; break;
    case '-': k = Tok::Minus; break;
    case '*': k = Tok::Star; break;
    case '/': k = Tok::Slash; break;
    case '^': k = Tok::Caret; break;
    case '(': k = Tok::LParen; break;
    case ')': k = Tok::RParen; break;
    default:
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
public:
  Parser(Group group, const std::string& text) : group_(std::move(group)), toks_(lex(text)) {}

  RationalExpression parse() {
    RationalExpression e = expr();
    if (peek().kind != Tok::End) {
      throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    }
    return e;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) {
      throw ParseError(std::string("expected ") + what, peek().pos);
    }
  }

  RationalExpression negate(const RationalExpression& e) {
    if (e.is_scalar_leaf()) {
      return RationalExpression::scalar(group_, -scalar_value(e.node()));
    }
    return RationalExpression::make_neg(e);
  }

  RationalExpression add(const RationalExpression& a, const RationalExpression& b) {
    if (a.is_scalar_leaf() && b.is_scalar_leaf()) {
      return RationalExpression::scalar(group_, scalar_value(a.node()) + scalar_value(b.node()));
    }
    return RationalExpression::make_add(a, b);
  }

  RationalExpression mul(const RationalExpression& a, const RationalExpression& b) {
    if (a.is_scalar_leaf() && b.is_scalar_leaf()) {
      return RationalExpression::scalar(group_, scalar_value(a.node()) * scalar_value(b.node()));
    }
    if (a.is_scalar_leaf()) {
      return RationalExpression::make_scalar_mul(scalar_value(a.node()), b);
    }
    if (b.is_scalar_leaf()) {
      return RationalExpression::make_scalar_mul(scalar_value(b.node()), a);
    }
    return RationalExpression::make_mul(a, b);
  }

  RationalExpression expr() {
    RationalExpression acc = accept(Tok::Minus) ? negate(term()) : term();
    while (true) {
      if (accept(Tok::Plus)) {
        acc = add(acc, term());
      } else if (accept(Tok::Minus)) {
        acc = add(acc, negate(term()));
      } else {
        return acc;
      }
    }
  }

  RationalExpression term() {
    RationalExpression acc = factor();
    while (accept(Tok::Star)) {
      acc = mul(acc, factor());
    }
    return acc;
  }

  RationalExpression factor() {
    RationalExpression acc = atom();
    while (peek().kind == Tok::Caret) {
      std::size_t at = next().pos;
      if (accept(Tok::Star)) {
        acc = RationalExpression::make_adjoint(acc);
      } else if (accept(Tok::Minus) && peek().kind == Tok::Number && peek().text == "1" &&
                 !peek().imaginary) {
        next();
        acc = RationalExpression::make_inv(acc);
      } else {
        throw ParseError("expected '^-1' or '^*'", at);
      }
    }
    return acc;
  }

  RationalExpression atom() {
    const Token& t = peek();
    switch (t.kind) {
    case Tok::Number: {
      next();
      mpq_class q(mpz_class(t.text));
      bool imaginary = t.imaginary;
      if (!imaginary && accept(Tok::Slash)) {
        const Token& d = peek();
        if (d.kind != Tok::Number) {
          throw ParseError("expected denominator", d.pos);
        }
        next();
        mpz_class den(d.text);
        if (den == 0) {
          throw ParseError("zero denominator", d.pos);
        }
        q = mpq_class(q.get_num(), den);
        q.canonicalize();
        imaginary = d.imaginary;
      }
      return RationalExpression::scalar(group_, imaginary ? ExactComplex(0, q) : ExactComplex(q));
    }
    case Tok::Ident: {
      next();
      if (t.text == "i") {
        return RationalExpression::scalar(group_, ExactComplex::i());
      }
      int idx = group_->index_of(t.text);
      if (idx == 0) {
        throw ParseError("unknown generator '" + t.text + "'", t.pos);
      }
      return RationalExpression::generator(group_, idx);
    }
    case Tok::LParen: {
      next();
      RationalExpression e = expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    case Tok::End:
      throw ParseError("unexpected end of input", t.pos);
    default:
      throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  Group group_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

GroupAlgebraElement evaluate(const ExprNode& n) {
  switch (n.kind) {
  case ExprKind::Leaf:
    return *n.leaf;
  case ExprKind::Add:
    return evaluate(*n.lhs) + evaluate(*n.rhs);
  case ExprKind::Neg:
    return -evaluate(*n.lhs);
  case ExprKind::Mul:
    return evaluate(*n.lhs) * evaluate(*n.rhs);
  case ExprKind::ScalarMul:
    return n.scalar * evaluate(*n.lhs);
  case ExprKind::Adjoint:
    return ga_adjoint(evaluate(*n.lhs));
  case ExprKind::Inv: {
    GroupAlgebraElement v = evaluate(*n.lhs);
    if (!v.is_monomial()) {
      throw NotInGroupAlgebra("inverse of '" + v.to_string() +
                              "' is not an element of the group algebra");
    }
    const auto& [w, c] = *v.terms().begin();
    return GroupAlgebraElement::word(v.group(), invert(w), c.inverse());
  }
  }
  throw std::logic_error("unknown expression node");
}

} // namespace

RationalExpression RationalExpression::leaf(GroupAlgebraElement a) {
  Group g = a.group();
  return RationalExpression(std::make_shared<const ExprNode>(
      ExprNode{ExprKind::Leaf, std::move(g), std::move(a), {}, nullptr, nullptr}));
}

RationalExpression RationalExpression::scalar(Group group, const ExactComplex& c) {
  return leaf(GroupAlgebraElement::scalar(std::move(group), c));
}

RationalExpression RationalExpression::generator(Group group, int index) {
  return leaf(GroupAlgebraElement::word(group, ReducedWord::generator(index)));
}

RationalExpression RationalExpression::make_add(const RationalExpression& a,
                                                const RationalExpression& b) {
  if (!same_group(a.group(), b.group())) {
    throw GeneratorMismatch();
  }
  return RationalExpression(new_node(ExprKind::Add, a.group(), a.node_, b.node_));
}

RationalExpression RationalExpression::make_neg(const RationalExpression& a) {
  return RationalExpression(new_node(ExprKind::Neg, a.group(), a.node_));
}

RationalExpression RationalExpression::make_mul(const RationalExpression& a,
                                                const RationalExpression& b) {
  if (!same_group(a.group(), b.group())) {
    throw GeneratorMismatch();
  }
  return RationalExpression(new_node(ExprKind::Mul, a.group(), a.node_, b.node_));
}

RationalExpression RationalExpression::make_inv(const RationalExpression& a) {
  return RationalExpression(new_node(ExprKind::Inv, a.group(), a.node_));
}

RationalExpression RationalExpression::make_adjoint(const RationalExpression& a) {
  return RationalExpression(new_node(ExprKind::Adjoint, a.group(), a.node_));
}

RationalExpression RationalExpression::make_scalar_mul(const ExactComplex& c,
                                                       const RationalExpression& a) {
  return RationalExpression(std::make_shared<const ExprNode>(
      ExprNode{ExprKind::ScalarMul, a.group(), std::nullopt, c, a.node_, nullptr}));
}

bool RationalExpression::is_scalar_leaf() const { return scalar_leaf(*node_); }

std::size_t RationalExpression::node_count() const { return count(*node_); }

std::string RationalExpression::to_string() const { return print(*node_).text; }

bool operator==(const RationalExpression& a, const RationalExpression& b) {
  return same_group(a.group(), b.group()) && nodes_equal(*a.node_, *b.node_);
}

RationalExpression expr_add(const RationalExpression& a, const RationalExpression& b) {
  return RationalExpression::make_add(a, b);
}

RationalExpression expr_neg(const RationalExpression& a) {
  if (a.kind() == ExprKind::Neg) {
    return a.lhs();
  }
  return RationalExpression::make_neg(a);
}

RationalExpression expr_mul(const RationalExpression& a, const RationalExpression& b) {
  return RationalExpression::make_mul(a, b);
}

RationalExpression expr_inv(const RationalExpression& a) {
  if (a.kind() == ExprKind::Inv) {
    return a.lhs();
  }
  return RationalExpression::make_inv(a);
}

RationalExpression expr_adjoint(const RationalExpression& a) {
  switch (a.kind()) {
  case ExprKind::Leaf:
    return RationalExpression::leaf(ga_adjoint(*a.node().leaf));
  case ExprKind::Add:
    return expr_add(expr_adjoint(a.lhs()), expr_adjoint(a.rhs()));
  case ExprKind::Neg:
    return expr_neg(expr_adjoint(a.lhs()));
  case ExprKind::Mul:
    return expr_mul(expr_adjoint(a.rhs()), expr_adjoint(a.lhs()));
  case ExprKind::ScalarMul:
    return expr_scale(a.node().scalar.conj(), expr_adjoint(a.lhs()));
  case ExprKind::Inv:
    return expr_inv(expr_adjoint(a.lhs()));
  case ExprKind::Adjoint:
    return eliminate_adjoints(a.lhs());
  }
  throw std::logic_error("unknown expression node");
}

RationalExpression expr_scale(const ExactComplex& c, const RationalExpression& a) {
  if (a.is_scalar_leaf()) {
    return RationalExpression::scalar(a.group(), c * scalar_value(a.node()));
  }
  return RationalExpression::make_scalar_mul(c, a);
}

RationalExpression eliminate_adjoints(const RationalExpression& e) {
  switch (e.kind()) {
  case ExprKind::Leaf:
    return e;
  case ExprKind::Add:
    return RationalExpression::make_add(eliminate_adjoints(e.lhs()), eliminate_adjoints(e.rhs()));
  case ExprKind::Mul:
    return RationalExpression::make_mul(eliminate_adjoints(e.lhs()), eliminate_adjoints(e.rhs()));
  case ExprKind::Neg:
    return RationalExpression::make_neg(eliminate_adjoints(e.lhs()));
  case ExprKind::ScalarMul:
    return RationalExpression::make_scalar_mul(e.node().scalar, eliminate_adjoints(e.lhs()));
  case ExprKind::Inv:
    return RationalExpression::make_inv(eliminate_adjoints(e.lhs()));
  case ExprKind::Adjoint:
    return expr_adjoint(eliminate_adjoints(e.lhs()));
  }
  throw std::logic_error("unknown expression node");
}

RationalExpression parse_expression(const Group& group, const std::string& text) {
  return Parser(group, text).parse();
}

GroupAlgebraElement to_group_algebra(const RationalExpression& e) { return evaluate(e.node()); }

GroupAlgebraElement parse_group_algebra(const Group& group, const std::string& text) {
  return to_group_algebra(parse_expression(group, text));
}

} // namespace ratcrit
