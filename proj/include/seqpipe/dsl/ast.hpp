#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "seqpipe/errors.hpp"

namespace seqpipe::dsl {

enum class NodeKind {
  Integer,   // value
  Rational,  // value (written p/q in the source)
  VarX,
  ParamR,
  Neg,       // args[0]
  Add,
  Sub,
  Mul,
  Div,       // args[0] op args[1]
  Pow,       // args[0] ^ exponent
  Call,      // name(args...)
  List,      // [args...]
  Symbol,    // bare identifier such as egf or N3
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  NodeKind kind;
  mpq_class value;
  long exponent = 0;
  std::string name;
  std::vector<NodePtr> args;
  Span span;
};

/// Largest |e| accepted after '^'.
inline constexpr long kMaxExponent = 64;

/// expr   := term (('+' | '-') term)*
/// term   := unary (('*' | '/') unary)*
/// unary  := '-' unary | factor
/// factor := atom ('^' '-'? int)?
/// atom   := int | int '/' int | 'x' | 'r' | '(' expr ')' | ident '(' args ')'
///         | ident | '[' args ']'
///
/// int '/' int is read as one rational literal unless it is itself the right
/// operand of '/' or the denominator is followed by '^'. Function names and
/// bare identifiers must be registered (see builtin_names / symbol_names).
NodePtr parse(std::string_view text);

/// Canonical text; parse(print(parse(s))) == parse(s) structurally.
std::string print(const Node& n);

bool same_tree(const Node& a, const Node& b);

/// Replaces every occurrence of r by the literal value v.
NodePtr bind_r(const NodePtr& n, const mpq_class& v);

const std::vector<std::string>& builtin_names();
const std::vector<std::string>& symbol_names();

}  // namespace seqpipe::dsl
