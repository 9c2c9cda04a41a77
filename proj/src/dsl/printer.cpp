#include "seqpipe/dsl/ast.hpp"

namespace seqpipe::dsl {

namespace {

int precedence(const Node& n) {
  switch (n.kind) {
    case NodeKind::Add:
    case NodeKind::Sub: return 1;
    case NodeKind::Mul:
    case NodeKind::Div: return 2;
    case NodeKind::Neg: return 3;
    case NodeKind::Pow: return 4;
    default: return 5;
  }
}

std::string wrap(const Node& n, bool parens) {
  std::string s = print(n);
  return parens ? "(" + s + ")" : s;
}

std::string join(const std::vector<NodePtr>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += print(*args[i]);
  }
  return out;
}

}  // namespace

std::string print(const Node& n) {
  switch (n.kind) {
    case NodeKind::Integer: return n.value.get_num().get_str();
    case NodeKind::Rational: return "(" + n.value.get_str() + ")";
    case NodeKind::VarX: return "x";
    case NodeKind::ParamR: return "r";
    case NodeKind::Symbol: return n.name;
    case NodeKind::Neg: return "-" + wrap(*n.args[0], precedence(*n.args[0]) < 3);
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
    case NodeKind::Div: {
      const int p = precedence(n);
      const Node& lhs = *n.args[0];
      const Node& rhs = *n.args[1];
      const char* op = n.kind == NodeKind::Add   ? " + "
                       : n.kind == NodeKind::Sub ? " - "
                       : n.kind == NodeKind::Mul ? " * "
                                                 : " / ";
      // A bare integer after '/' would fuse with the numerator into a
      // rational literal.
      const bool rhs_parens =
          precedence(rhs) <= p || (n.kind == NodeKind::Div && rhs.kind == NodeKind::Integer);
      return wrap(lhs, precedence(lhs) < p) + op + wrap(rhs, rhs_parens);
    }
    case NodeKind::Pow: {
      const Node& base = *n.args[0];
      return wrap(base, precedence(base) < 5) + "^" + std::to_string(n.exponent);
    }
    case NodeKind::Call: return n.name + "(" + join(n.args) + ")";
    case NodeKind::List: return "[" + join(n.args) + "]";
  }
  return "";
}

}  // namespace seqpipe::dsl
