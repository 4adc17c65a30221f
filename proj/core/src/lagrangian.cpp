#include "frac/lagrangian.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <utility>
#include <vector>

namespace frac::expr {
namespace {

NodePtr make(NodeKind kind, double value, int index, NodePtr lhs, NodePtr rhs, long offset) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->value = value;
  n->index = index;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  n->offset = offset;
  return n;
}

NodePtr constant(double v, long offset = -1) { return make(NodeKind::Constant, v, 0, nullptr, nullptr, offset); }

bool is_const(const NodePtr& n, double v) { return n->kind == NodeKind::Constant && n->value == v; }
bool is_const(const NodePtr& n) { return n->kind == NodeKind::Constant; }

// ---- folding constructors: constant folding and 0/1 elimination only ----

NodePtr fold_add(NodePtr a, NodePtr b) {
  if (is_const(a) && is_const(b)) return constant(a->value + b->value);
  if (is_const(a, 0.0)) return b;
  if (is_const(b, 0.0)) return a;
  return make(NodeKind::Add, 0, 0, std::move(a), std::move(b), -1);
}

NodePtr fold_neg(NodePtr a) {
  if (is_const(a)) return constant(-a->value);
  if (a->kind == NodeKind::Neg) return a->lhs;
  return make(NodeKind::Neg, 0, 0, std::move(a), nullptr, -1);
}

NodePtr fold_sub(NodePtr a, NodePtr b) {
  if (is_const(a) && is_const(b)) return constant(a->value - b->value);
  if (is_const(b, 0.0)) return a;
  if (is_const(a, 0.0)) return fold_neg(std::move(b));
  return make(NodeKind::Sub, 0, 0, std::move(a), std::move(b), -1);
}

NodePtr fold_mul(NodePtr a, NodePtr b) {
  if (is_const(a) && is_const(b)) return constant(a->value * b->value);
  if (is_const(a, 0.0) || is_const(b, 0.0)) return constant(0.0);
  if (is_const(a, 1.0)) return b;
  if (is_const(b, 1.0)) return a;
  return make(NodeKind::Mul, 0, 0, std::move(a), std::move(b), -1);
}

NodePtr fold_div(NodePtr a, NodePtr b) {
  if (is_const(a) && is_const(b) && b->value != 0.0) return constant(a->value / b->value);
  if (is_const(b, 1.0)) return a;
  if (is_const(a, 0.0)) return constant(0.0);
  return make(NodeKind::Div, 0, 0, std::move(a), std::move(b), -1);
}

NodePtr fold_pow(NodePtr a, NodePtr b) {
  if (is_const(b, 1.0)) return a;
  if (is_const(b, 0.0)) return constant(1.0);
  if (is_const(a) && is_const(b)) {
    const double v = std::pow(a->value, b->value);
    if (std::isfinite(v)) return constant(v);
  }
  return make(NodeKind::Pow, 0, 0, std::move(a), std::move(b), -1);
}

NodePtr fold_unary(NodeKind kind, NodePtr a) {
  if (is_const(a)) {
    const double u = a->value;
    double v = 0.0;
    bool ok = true;
    switch (kind) {
      case NodeKind::Sin: v = std::sin(u); break;
      case NodeKind::Cos: v = std::cos(u); break;
      case NodeKind::Exp: v = std::exp(u); break;
      case NodeKind::Ln: ok = u > 0.0; v = ok ? std::log(u) : 0.0; break;
      case NodeKind::Sqrt: ok = u >= 0.0; v = ok ? std::sqrt(u) : 0.0; break;
      case NodeKind::Abs: v = std::fabs(u); break;
      case NodeKind::Sign: v = (u > 0.0) - (u < 0.0); break;
      default: ok = false; break;
    }
    if (ok && std::isfinite(v)) return constant(v);
  }
  return make(kind, 0, 0, std::move(a), nullptr, -1);
}

// ---- parser ----

class Parser {
public:
  Parser(std::string_view text, int components) : text_(text), components_(components) {}

  NodePtr run() {
    NodePtr e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
    return e;
  }

private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NodePtr parse_expr() {
    NodePtr e = parse_term();
    for (;;) {
      const long off = operator_offset();
      if (consume('+')) e = make(NodeKind::Add, 0, 0, e, parse_term(), off);
      else if (consume('-')) e = make(NodeKind::Sub, 0, 0, e, parse_term(), off);
      else return e;
    }
  }

  NodePtr parse_term() {
    NodePtr e = parse_unary();
    for (;;) {
      const long off = operator_offset();
      if (consume('*')) e = make(NodeKind::Mul, 0, 0, e, parse_unary(), off);
      else if (consume('/')) e = make(NodeKind::Div, 0, 0, e, parse_unary(), off);
      else return e;
    }
  }

  long operator_offset() {
    skip_space();
    return static_cast<long>(pos_);
  }

  NodePtr parse_unary() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') {
      const long off = static_cast<long>(pos_);
      ++pos_;
      NodePtr inner = parse_unary();
      // fold a negated literal so printed negative constants re-parse
      // to the same node
      if (inner->kind == NodeKind::Constant) return constant(-inner->value, off);
      return make(NodeKind::Neg, 0, 0, std::move(inner), nullptr, off);
    }
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      const long off = static_cast<long>(pos_);
      ++pos_;
      // right-associative; the exponent may carry a unary minus
      return make(NodeKind::Pow, 0, 0, base, parse_unary(), off);
    }
    return base;
  }

  NodePtr parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(pos_, "expected an operand");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = parse_expr();
      if (!consume(')')) throw ParseError(pos_, "expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    double v = 0.0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) throw ParseError(start, "malformed number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return constant(v, static_cast<long>(start));
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    const long off = static_cast<long>(start);

    if (name == "x") return make(NodeKind::X, 0, 0, nullptr, nullptr, off);

    static constexpr std::pair<std::string_view, NodeKind> kFunctions[] = {
        {"sin", NodeKind::Sin}, {"cos", NodeKind::Cos}, {"exp", NodeKind::Exp},
        {"ln", NodeKind::Ln},   {"sqrt", NodeKind::Sqrt}, {"abs", NodeKind::Abs},
        {"sign", NodeKind::Sign}};
    for (const auto& [fname, kind] : kFunctions) {
      if (name == fname) {
        if (!consume('(')) throw ParseError(pos_, std::string(fname) + " requires '('");
        NodePtr arg = parse_expr();
        if (!consume(')')) throw ParseError(pos_, "expected ')'");
        return make(kind, 0, 0, std::move(arg), nullptr, off);
      }
    }

    auto indexed = [&](std::string_view prefix) -> int {
      if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return 0;
      int idx = 0;
      const char* first = name.data() + prefix.size();
      const char* last = name.data() + name.size();
      auto [ptr, ec] = std::from_chars(first, last, idx);
      return (ec == std::errc() && ptr == last && idx >= 1) ? idx : 0;
    };
    // match the longer prefixes first so dy2 is not read as y with junk
    for (const auto& [prefix, kind] :
         {std::pair<std::string_view, NodeKind>{"Dy", NodeKind::DFrac},
          std::pair<std::string_view, NodeKind>{"dy", NodeKind::DY},
          std::pair<std::string_view, NodeKind>{"y", NodeKind::Y}}) {
      const int idx = indexed(prefix);
      if (idx > 0) {
        if (idx > components_)
          throw ParseError(start, "component index " + std::to_string(idx) +
                                      " exceeds N = " + std::to_string(components_));
        return make(kind, 0, idx, nullptr, nullptr, off);
      }
    }
    throw ParseError(start, "unknown identifier '" + std::string(name) + "'");
  }

  std::string_view text_;
  int components_;
  std::size_t pos_ = 0;
};

// ---- evaluation ----

double eval_node(const Node* n, const PointBinding& at) {
  switch (n->kind) {
    case NodeKind::Constant: return n->value;
    case NodeKind::X: return at.x;
    case NodeKind::Y: return at.y[static_cast<std::size_t>(n->index - 1)];
    case NodeKind::DY: return at.dy[static_cast<std::size_t>(n->index - 1)];
    case NodeKind::DFrac: return at.Dy[static_cast<std::size_t>(n->index - 1)];
    case NodeKind::Add: return eval_node(n->lhs.get(), at) + eval_node(n->rhs.get(), at);
    case NodeKind::Sub: return eval_node(n->lhs.get(), at) - eval_node(n->rhs.get(), at);
    case NodeKind::Mul: return eval_node(n->lhs.get(), at) * eval_node(n->rhs.get(), at);
    case NodeKind::Div: {
      const double a = eval_node(n->lhs.get(), at);
      const double b = eval_node(n->rhs.get(), at);
      if (b == 0.0) throw EvalError(n->offset, "division by zero");
      return a / b;
    }
    case NodeKind::Pow: {
      const double a = eval_node(n->lhs.get(), at);
      const double b = eval_node(n->rhs.get(), at);
      if (a < 0.0 && b != std::nearbyint(b))
        throw EvalError(n->offset, "negative base raised to a non-integer power");
      if (a == 0.0 && b < 0.0) throw EvalError(n->offset, "zero raised to a negative power");
      return std::pow(a, b);
    }
    case NodeKind::Neg: return -eval_node(n->lhs.get(), at);
    case NodeKind::Sin: return std::sin(eval_node(n->lhs.get(), at));
    case NodeKind::Cos: return std::cos(eval_node(n->lhs.get(), at));
    case NodeKind::Exp: return std::exp(eval_node(n->lhs.get(), at));
    case NodeKind::Ln: {
      const double a = eval_node(n->lhs.get(), at);
      if (a <= 0.0) throw EvalError(n->offset, "ln of a non-positive value");
      return std::log(a);
    }
    case NodeKind::Sqrt: {
      const double a = eval_node(n->lhs.get(), at);
      if (a < 0.0) throw EvalError(n->offset, "sqrt of a negative value");
      return std::sqrt(a);
    }
    case NodeKind::Abs: return std::fabs(eval_node(n->lhs.get(), at));
    case NodeKind::Sign: {
      const double a = eval_node(n->lhs.get(), at);
      return static_cast<double>((a > 0.0) - (a < 0.0));
    }
  }
  throw EvalError(n->offset, "corrupt expression node");
}

// ---- differentiation ----

NodePtr diff_node(const NodePtr& n, const Variable& var) {
  switch (n->kind) {
    case NodeKind::Constant:
    case NodeKind::X:
      return constant(0.0);
    case NodeKind::Y:
    case NodeKind::DY:
    case NodeKind::DFrac:
      return constant(n->kind == var.kind && n->index == var.index ? 1.0 : 0.0);
    case NodeKind::Add: return fold_add(diff_node(n->lhs, var), diff_node(n->rhs, var));
    case NodeKind::Sub: return fold_sub(diff_node(n->lhs, var), diff_node(n->rhs, var));
    case NodeKind::Mul:
      return fold_add(fold_mul(diff_node(n->lhs, var), n->rhs),
                      fold_mul(n->lhs, diff_node(n->rhs, var)));
    case NodeKind::Div:
      // (u'v - uv') / v^2
      return fold_div(fold_sub(fold_mul(diff_node(n->lhs, var), n->rhs),
                               fold_mul(n->lhs, diff_node(n->rhs, var))),
                      fold_pow(n->rhs, constant(2.0)));
    case NodeKind::Pow: {
      if (is_const(n->rhs)) {
        // c * u^(c-1) * u'
        const double c = n->rhs->value;
        return fold_mul(fold_mul(constant(c), fold_pow(n->lhs, constant(c - 1.0))),
                        diff_node(n->lhs, var));
      }
      // u^v * (v' ln u + v u'/u)
      return fold_mul(make(NodeKind::Pow, 0, 0, n->lhs, n->rhs, n->offset),
                      fold_add(fold_mul(diff_node(n->rhs, var), fold_unary(NodeKind::Ln, n->lhs)),
                               fold_div(fold_mul(n->rhs, diff_node(n->lhs, var)), n->lhs)));
    }
    case NodeKind::Neg: return fold_neg(diff_node(n->lhs, var));
    case NodeKind::Sin: return fold_mul(fold_unary(NodeKind::Cos, n->lhs), diff_node(n->lhs, var));
    case NodeKind::Cos:
      return fold_neg(fold_mul(fold_unary(NodeKind::Sin, n->lhs), diff_node(n->lhs, var)));
    case NodeKind::Exp: return fold_mul(fold_unary(NodeKind::Exp, n->lhs), diff_node(n->lhs, var));
    case NodeKind::Ln: return fold_div(diff_node(n->lhs, var), n->lhs);
    case NodeKind::Sqrt:
      return fold_div(diff_node(n->lhs, var),
                      fold_mul(constant(2.0), fold_unary(NodeKind::Sqrt, n->lhs)));
    case NodeKind::Abs:
      return fold_mul(fold_unary(NodeKind::Sign, n->lhs), diff_node(n->lhs, var));
    case NodeKind::Sign: return constant(0.0); // a.e.; jump at 0 ignored
  }
  return constant(0.0);
}

// ---- printing ----

int precedence(NodeKind k) {
  switch (k) {
    case NodeKind::Add:
    case NodeKind::Sub: return 1;
    case NodeKind::Mul:
    case NodeKind::Div: return 2;
    case NodeKind::Neg: return 3;
    case NodeKind::Pow: return 4;
    default: return 5;
  }
}

void print_node(const Node* n, std::string& out);

void print_child(const Node* child, int min_prec, std::string& out) {
  const bool parens = precedence(child->kind) < min_prec;
  if (parens) out += '(';
  print_node(child, out);
  if (parens) out += ')';
}

std::string format_value(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void print_node(const Node* n, std::string& out) {
  switch (n->kind) {
    case NodeKind::Constant:
      if (n->value < 0.0) {
        out += '(';
        out += format_value(n->value);
        out += ')';
      } else {
        out += format_value(n->value);
      }
      return;
    case NodeKind::X: out += 'x'; return;
    case NodeKind::Y: out += 'y' + std::to_string(n->index); return;
    case NodeKind::DY: out += "dy" + std::to_string(n->index); return;
    case NodeKind::DFrac: out += "Dy" + std::to_string(n->index); return;
    case NodeKind::Add:
      print_child(n->lhs.get(), 1, out);
      out += " + ";
      print_child(n->rhs.get(), 2, out); // keep left association on re-parse
      return;
    case NodeKind::Sub:
      print_child(n->lhs.get(), 1, out);
      out += " - ";
      print_child(n->rhs.get(), 2, out);
      return;
    case NodeKind::Mul:
      print_child(n->lhs.get(), 2, out);
      out += '*';
      print_child(n->rhs.get(), 3, out);
      return;
    case NodeKind::Div:
      print_child(n->lhs.get(), 2, out);
      out += '/';
      print_child(n->rhs.get(), 3, out);
      return;
    case NodeKind::Pow:
      print_child(n->lhs.get(), 5, out);
      out += '^';
      print_child(n->rhs.get(), 3, out);
      return;
    case NodeKind::Neg:
      out += '-';
      print_child(n->lhs.get(), 3, out);
      return;
    case NodeKind::Sin:
    case NodeKind::Cos:
    case NodeKind::Exp:
    case NodeKind::Ln:
    case NodeKind::Sqrt:
    case NodeKind::Abs:
    case NodeKind::Sign: {
      switch (n->kind) {
        case NodeKind::Sin: out += "sin("; break;
        case NodeKind::Cos: out += "cos("; break;
        case NodeKind::Exp: out += "exp("; break;
        case NodeKind::Ln: out += "ln("; break;
        case NodeKind::Sqrt: out += "sqrt("; break;
        case NodeKind::Abs: out += "abs("; break;
        default: out += "sign("; break;
      }
      print_node(n->lhs.get(), out);
      out += ')';
      return;
    }
  }
}

bool equal_nodes(const Node* a, const Node* b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->value != b->value || a->index != b->index) return false;
  const bool l = (a->lhs == nullptr) == (b->lhs == nullptr);
  const bool r = (a->rhs == nullptr) == (b->rhs == nullptr);
  if (!l || !r) return false;
  if (a->lhs && !equal_nodes(a->lhs.get(), b->lhs.get())) return false;
  if (a->rhs && !equal_nodes(a->rhs.get(), b->rhs.get())) return false;
  return true;
}

bool node_depends_on(const Node* n, NodeKind kind) {
  if (n->kind == kind) return true;
  if (n->lhs && node_depends_on(n->lhs.get(), kind)) return true;
  if (n->rhs && node_depends_on(n->rhs.get(), kind)) return true;
  return false;
}

} // namespace

LagrangianExpr parse(std::string_view text, int components) {
  if (components < 0) throw std::invalid_argument("component count must be non-negative");
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) throw ParseError(0, "empty expression");
  return LagrangianExpr(Parser(text, components).run(), components);
}

double eval(const LagrangianExpr& e, const PointBinding& at) {
  if (e.empty()) throw EvalError(-1, "evaluating an empty expression");
  const auto need = static_cast<std::size_t>(e.arity());
  if (at.y.size() < need || at.dy.size() < need || at.Dy.size() < need)
    throw EvalError(-1, "binding arity does not match the expression");
  return eval_node(e.root().get(), at);
}

LagrangianExpr diff(const LagrangianExpr& e, const Variable& var) {
  if (e.empty()) throw std::invalid_argument("differentiating an empty expression");
  if (var.kind != NodeKind::Y && var.kind != NodeKind::DY && var.kind != NodeKind::DFrac)
    throw std::invalid_argument("diff variable must be one of y_i, dy_i, Dy_i");
  if (var.index < 1 || var.index > e.arity())
    throw std::invalid_argument("diff variable index out of range");
  return LagrangianExpr(diff_node(e.root(), var), e.arity());
}

std::string to_string(const LagrangianExpr& e) {
  if (e.empty()) return std::string();
  std::string out;
  print_node(e.root().get(), out);
  return out;
}

bool structurally_equal(const LagrangianExpr& a, const LagrangianExpr& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  return equal_nodes(a.root().get(), b.root().get());
}

bool depends_on(const LagrangianExpr& e, NodeKind kind) {
  return !e.empty() && node_depends_on(e.root().get(), kind);
}

} // namespace frac::expr
