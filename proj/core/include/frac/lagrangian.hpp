#pragma once

// Expression language for Lagrangian integrands L(x, y, y', Dy) and
// constraint integrands. Variables are `x`, `y1..yN`, `dy1..dyN`
// (classical derivative) and `Dy1..DyN` (combined fractional
// derivative); operators + - * / ^ with precedence ^ > unary minus
// > * / > + -; functions sin, cos, exp, ln, sqrt, abs, sign.
//
// Expressions are immutable after parsing; evaluation and symbolic
// differentiation are pure, so trees can be shared across threads.

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "frac/errors.hpp"

namespace frac::expr {

enum class NodeKind {
  Constant,
  X,
  Y,     // y_i
  DY,    // dy_i, classical derivative
  DFrac, // Dy_i, combined fractional derivative
  Add,
  Sub,
  Mul,
  Div,
  Pow,
  Neg,
  Sin,
  Cos,
  Exp,
  Ln,
  Sqrt,
  Abs,
  Sign
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  NodeKind kind;
  double value = 0.0; // Constant payload
  int index = 0;      // 1-based component index for Y/DY/DFrac
  NodePtr lhs;
  NodePtr rhs;        // null for unary nodes
  long offset = -1;   // source byte offset; -1 for synthesized nodes
};

/// A variable y_i, dy_i or Dy_i to differentiate with respect to.
struct Variable {
  NodeKind kind;
  int index;
};

/// Parsed expression plus the component count N it was parsed against.
class LagrangianExpr {
public:
  LagrangianExpr() = default;
  LagrangianExpr(NodePtr root, int arity) : root_(std::move(root)), arity_(arity) {}

  const NodePtr& root() const { return root_; }
  int arity() const { return arity_; }
  bool empty() const { return root_ == nullptr; }

private:
  NodePtr root_;
  int arity_ = 0;
};

/// Values of the variables at one point.
struct PointBinding {
  double x = 0.0;
  std::span<const double> y;
  std::span<const double> dy;
  std::span<const double> Dy;
};

/// Parses `text` against component count N. Throws ParseError with a
/// byte offset on syntax errors, unknown identifiers, and component
/// indices exceeding N.
LagrangianExpr parse(std::string_view text, int components);

/// Recursive evaluation. Throws EvalError (carrying the node's source
/// offset) on domain violations: ln of a non-positive value, division
/// by zero, sqrt of a negative value, negative base raised to a
/// non-integer power.
double eval(const LagrangianExpr& e, const PointBinding& at);

/// Symbolic partial derivative, simplified only by constant folding and
/// 0/1 elimination. d|u|/du uses sign(u) with sign(0) = 0.
LagrangianExpr diff(const LagrangianExpr& e, const Variable& var);

/// Prints a form that re-parses to a structurally identical tree.
std::string to_string(const LagrangianExpr& e);

/// Structural equality, ignoring source offsets.
bool structurally_equal(const LagrangianExpr& a, const LagrangianExpr& b);

/// True if any leaf of the given variable kind occurs in the tree.
bool depends_on(const LagrangianExpr& e, NodeKind kind);

} // namespace frac::expr
