#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "seqpipe/cfrac.hpp"
#include "seqpipe/dsl/ast.hpp"
#include "seqpipe/series.hpp"
#include "seqpipe/triangles.hpp"

namespace seqpipe::dsl {

struct Symbol {
  std::string name;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

struct Value;

struct List {
  std::vector<Value> items;
};

/// Result of evaluating an expression. PolyX holds exact polynomials in x
/// until they meet a division or a series; Symbol and List only occur as
/// builtin arguments (a list of scalars may also be printed).
struct Value {
  std::variant<FieldElem, PolyX, Series, Triangle, JFraction, SFraction, SquareMatrix, List, Symbol>
      v;

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(v);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(v);
  }
};

bool operator==(const Value& a, const Value& b);
bool operator==(const List& a, const List& b);

/// "scalar", "series", "triangle", ...
std::string_view kind_name(const Value& v);

struct Env {
  std::size_t order = 10;
  /// When set, r is replaced by this value after evaluation.
  std::optional<mpq_class> r_value;
};

/// Evaluates at working precision env.order, raising the working precision
/// of the whole expression when losses along the way (derivatives, the
/// pipeline, valuation cancellation) leave fewer than env.order
/// coefficients. A series result has exactly env.order coefficients; a
/// polynomial in x is returned as a series.
///
/// Errors are MathError (carrying the span of the innermost failing
/// subexpression); ArityError and TypeErrorValue signal a malformed call.
Value evaluate(const Node& ast, const Env& env);
Value evaluate(std::string_view text, const Env& env);

/// Replaces r by `at` in every entry; EvaluationPole when a denominator
/// vanishes there.
Value substitute_r(const Value& v, const FieldElem& at);

}  // namespace seqpipe::dsl
