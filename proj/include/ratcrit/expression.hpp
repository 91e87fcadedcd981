#ifndef RATCRIT_EXPRESSION_HPP
#define RATCRIT_EXPRESSION_HPP

#include "ratcrit/algebra.hpp"

#include <memory>
#include <optional>
#include <string>

namespace ratcrit {

enum class ExprKind { Leaf, Add, Neg, Mul, Inv, Adjoint, ScalarMul };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  ExprKind kind;
  Group group;
  std::optional<GroupAlgebraElement> leaf; // Leaf only
  ExactComplex scalar;                     // ScalarMul only
  ExprPtr lhs;               // every non-leaf node
  ExprPtr rhs;               // Add and Mul
};

/// Immutable rational expression over CG. Copies share structure.
class RationalExpression {
public:
  explicit RationalExpression(ExprPtr node) : node_(std::move(node)) {}

  static RationalExpression leaf(GroupAlgebraElement a);
  static RationalExpression scalar(Group group, const ExactComplex& c);
  static RationalExpression generator(Group group, int index);

  // Plain node constructors without simplification.
  static RationalExpression make_add(const RationalExpression& a, const RationalExpression& b);
  static RationalExpression make_neg(const RationalExpression& a);
  static RationalExpression make_mul(const RationalExpression& a, const RationalExpression& b);
  static RationalExpression make_inv(const RationalExpression& a);
  static RationalExpression make_adjoint(const RationalExpression& a);
  static RationalExpression make_scalar_mul(const ExactComplex& c, const RationalExpression& a);

  const ExprNode& node() const { return *node_; }
  const ExprPtr& ptr() const { return node_; }
  ExprKind kind() const { return node_->kind; }
  const Group& group() const { return node_->group; }
  RationalExpression lhs() const { return RationalExpression(node_->lhs); }
  RationalExpression rhs() const { return RationalExpression(node_->rhs); }

  /// Leaf supported on the identity only (including zero).
  bool is_scalar_leaf() const;
  std::size_t node_count() const;

  /// Text accepted by parse_expression.
  std::string to_string() const;

  friend bool operator==(const RationalExpression& a, const RationalExpression& b);

private:
  ExprPtr node_;
};

// Constructors with local simplification: Inv(Inv e) = e, Adjoint is pushed
// to the leaves (involutive, antimultiplicative, commutes with Inv).
RationalExpression expr_add(const RationalExpression& a, const RationalExpression& b);
RationalExpression expr_neg(const RationalExpression& a);
RationalExpression expr_mul(const RationalExpression& a, const RationalExpression& b);
RationalExpression expr_inv(const RationalExpression& a);
RationalExpression expr_adjoint(const RationalExpression& a);
RationalExpression expr_scale(const ExactComplex& c, const RationalExpression& a);

/// Rewrites every Adjoint node away by pushing it to the leaves.
RationalExpression eliminate_adjoints(const RationalExpression& e);

/// Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^-1' | '^*')*
///   atom   := scalar | 'i' | generator | '(' expr ')'
///   scalar := digits ['/' digits] ['i']
/// Products and sums of scalar literals fold into a single scalar leaf; a
/// scalar times anything else becomes ScalarMul. Throws ParseError.
RationalExpression parse_expression(const Group& group, const std::string& text);

/// Exact value in CG; inverses are allowed only of c*g with c != 0.
/// Throws NotInGroupAlgebra otherwise.
GroupAlgebraElement to_group_algebra(const RationalExpression& e);
GroupAlgebraElement parse_group_algebra(const Group& group, const std::string& text);

} // namespace ratcrit

#endif
