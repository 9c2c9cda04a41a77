#include "seqpipe/dsl/eval.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <type_traits>

#include "seqpipe/errors.hpp"
#include "seqpipe/oracle.hpp"
#include "seqpipe/transforms.hpp"

namespace seqpipe::dsl {

bool operator==(const List& a, const List& b) { return a.items == b.items; }
bool operator==(const Value& a, const Value& b) { return a.v == b.v; }

std::string_view kind_name(const Value& v) {
  static constexpr std::string_view names[] = {"scalar",    "polynomial", "series",
                                               "triangle",  "jfraction",  "sfraction",
                                               "matrix",    "list",       "symbol"};
  return names[v.v.index()];
}

namespace {

[[noreturn]] void type_error(const std::string& msg) { raise(ErrorKind::TypeErrorValue, msg); }

std::size_t valuation(const PolyX& p) {
  std::size_t v = 0;
  while (v < p.coeffs().size() && p.coeffs()[v].is_zero()) ++v;
  return v;
}

Series shift_down(const Series& s, std::size_t k) {
  return Series(std::vector<FieldElem>(s.coeffs().begin() + static_cast<long>(k), s.coeffs().end()));
}

/// num/den with a common power of x cancelled first.
Series ratfun(const PolyX& num, const PolyX& den, std::size_t w) {
  if (den.is_zero()) raise(ErrorKind::DivisionByZero, "division by the zero polynomial");
  const std::size_t v = valuation(den);
  if (v == 0) return from_ratfun(num, den, w);
  if (!num.is_zero() && valuation(num) < v) {
    raise(ErrorKind::NonUnitConstantTerm, "quotient has a pole at x = 0");
  }
  return from_ratfun(num.is_zero() ? num : num.shifted_down(v), den.shifted_down(v), w);
}

/// a/b for series, cancelling a common power of x.
Series series_div(const Series& a, const Series& b) {
  const std::size_t v = b.valuation();
  if (v == 0 || v >= b.prec()) return div(a, b);
  if (a.valuation() < std::min(v, a.prec())) {
    raise(ErrorKind::NonUnitConstantTerm, "quotient has a pole at x = 0");
  }
  return div(shift_down(a, std::min(v, a.prec())), shift_down(b, v));
}

PolyX poly_pow(const PolyX& p, long e) {
  PolyX out{FieldElem(1)};
  for (long i = 0; i < e; ++i) out = out * p;
  return out;
}

struct Evaluator {
  explicit Evaluator(std::size_t order) : order_(order) {}

  Value eval(const Node& n, std::size_t w) {
    try {
      return eval_inner(n, w);
    } catch (MathError& e) {
      e.attach_span(n.span);
      throw;
    }
  }

  /// Evaluates `n` as a series with at least `need` coefficients, raising the
  /// working precision as needed; the result is truncated to `need`.
  Series series_at_least(const Node& n, std::size_t need) {
    std::size_t w = std::max<std::size_t>(need, 1);
    std::size_t last = 0;
    bool first = true;
    while (true) {
      const Series s = to_series(eval(n, w), w);
      if (s.prec() >= need) return s.truncated(need);
      if (!first && s.prec() <= last) {
        MathError e(ErrorKind::PrecisionExhausted,
                    "expression determines only " + std::to_string(s.prec()) +
                        " coefficients, " + std::to_string(need) + " needed");
        e.attach_span(n.span);
        throw e;
      }
      first = false;
      last = s.prec();
      w += need - s.prec();
    }
  }

  Value eval_top(const Node& n) {
    const Value v = eval(n, order_);
    if (v.is<Series>() && v.as<Series>().prec() < order_) return Value{series_at_least(n, order_)};
    if (v.is<Series>()) return Value{v.as<Series>().truncated(order_)};
    if (v.is<PolyX>()) return Value{v.as<PolyX>().to_series(order_)};
    return v;
  }

  static Series to_series(const Value& v, std::size_t w) {
    if (v.is<FieldElem>()) return Series::constant(v.as<FieldElem>(), w);
    if (v.is<PolyX>()) return v.as<PolyX>().to_series(w);
    if (v.is<Series>()) return v.as<Series>();
    type_error("expected a series, got a " + std::string(kind_name(v)));
  }

  using Builtin = std::function<Value(Evaluator&, const Node&, std::size_t)>;

  Value eval_inner(const Node& n, std::size_t w) {
    switch (n.kind) {
      case NodeKind::Integer:
      case NodeKind::Rational: return Value{FieldElem(n.value)};
      case NodeKind::VarX: return Value{PolyX{FieldElem(), FieldElem(1)}};
      case NodeKind::ParamR: return Value{FieldElem::r()};
      case NodeKind::Symbol: return Value{Symbol{n.name}};
      case NodeKind::List: {
        List l;
        for (const auto& a : n.args) l.items.push_back(eval(*a, w));
        return Value{std::move(l)};
      }
      case NodeKind::Neg: return negate(eval(*n.args[0], w));
      case NodeKind::Add:
      case NodeKind::Sub:
      case NodeKind::Mul:
      case NodeKind::Div: {
        const Value a = eval(*n.args[0], w);
        const Value b = eval(*n.args[1], w);
        return binary(n.kind, a, b, w);
      }
      case NodeKind::Pow: return power(eval(*n.args[0], w), n.exponent, w);
      case NodeKind::Call: {
        const auto& table = builtins();
        auto it = table.find(n.name);
        if (it == table.end()) type_error("no builtin named " + n.name);
        return it->second(*this, n, w);
      }
    }
    type_error("unknown node");
  }

  static int rank(const Value& v) {
    if (v.is<FieldElem>()) return 0;
    if (v.is<PolyX>()) return 1;
    if (v.is<Series>()) return 2;
    return -1;
  }

  static PolyX to_poly(const Value& v) {
    if (v.is<PolyX>()) return v.as<PolyX>();
    return PolyX{v.as<FieldElem>()};
  }

  static Value negate(const Value& v) {
    if (v.is<FieldElem>()) return Value{-v.as<FieldElem>()};
    if (v.is<PolyX>()) return Value{-v.as<PolyX>()};
    if (v.is<Series>()) return Value{neg(v.as<Series>())};
    type_error("cannot negate a " + std::string(kind_name(v)));
  }

  static Value binary(NodeKind op, const Value& a, const Value& b, std::size_t w) {
    if (op == NodeKind::Mul && a.is<Triangle>() && b.is<Triangle>()) {
      return Value{matmul(a.as<Triangle>(), b.as<Triangle>())};
    }
    if (op == NodeKind::Mul && a.is<SquareMatrix>() && b.is<SquareMatrix>()) {
      return Value{matmul(a.as<SquareMatrix>(), b.as<SquareMatrix>())};
    }
    const int ra = rank(a);
    const int rb = rank(b);
    if (ra < 0 || rb < 0) {
      type_error(std::string("arithmetic on ") + std::string(kind_name(a)) + " and " +
                 std::string(kind_name(b)));
    }
    const int r = std::max(ra, rb);
    if (op == NodeKind::Div && r == 1) {
      if (rb == 0) {
        const FieldElem inv = b.as<FieldElem>().inverse();
        std::vector<FieldElem> c = to_poly(a).coeffs();
        for (auto& e : c) e *= inv;
        return Value{PolyX(std::move(c))};
      }
      return Value{ratfun(to_poly(a), to_poly(b), w)};
    }
    if (r == 0) {
      const FieldElem& x = a.as<FieldElem>();
      const FieldElem& y = b.as<FieldElem>();
      switch (op) {
        case NodeKind::Add: return Value{x + y};
        case NodeKind::Sub: return Value{x - y};
        case NodeKind::Mul: return Value{x * y};
        default: return Value{x / y};
      }
    }
    if (r == 1) {
      const PolyX x = to_poly(a);
      const PolyX y = to_poly(b);
      switch (op) {
        case NodeKind::Add: return Value{x + y};
        case NodeKind::Sub: return Value{x - y};
        default: return Value{x * y};
      }
    }
    // Series with a scalar: keep the series' precision.
    if (op == NodeKind::Mul && (ra == 0 || rb == 0)) {
      return ra == 0 ? Value{scale(b.as<Series>(), a.as<FieldElem>())}
                     : Value{scale(a.as<Series>(), b.as<FieldElem>())};
    }
    if (op == NodeKind::Div && rb == 0) {
      return Value{scale(a.as<Series>(), b.as<FieldElem>().inverse())};
    }
    const std::size_t pa = ra == 2 ? a.as<Series>().prec() : w;
    const std::size_t pb = rb == 2 ? b.as<Series>().prec() : w;
    const Series x = to_series(a, std::max(pa, pb));
    const Series y = to_series(b, std::max(pa, pb));
    switch (op) {
      case NodeKind::Add: return Value{add(x, y)};
      case NodeKind::Sub: return Value{sub(x, y)};
      case NodeKind::Mul: return Value{mul(x, y)};
      default: return Value{series_div(x, y)};
    }
  }

  static Value power(const Value& base, long e, std::size_t w) {
    if (base.is<FieldElem>()) return Value{base.as<FieldElem>().pow(e)};
    if (base.is<PolyX>()) {
      if (e >= 0) return Value{poly_pow(base.as<PolyX>(), e)};
      return Value{ratfun(PolyX{FieldElem(1)}, poly_pow(base.as<PolyX>(), -e), w)};
    }
    if (base.is<Series>()) {
      const Series& s = base.as<Series>();
      if (e < 0 && s.valuation() > 0 && s.valuation() < s.prec()) {
        return Value{series_div(Series::one(s.prec()), pow_int(s, -e))};
      }
      return Value{pow_int(s, e)};
    }
    type_error("cannot raise a " + std::string(kind_name(base)) + " to a power");
  }

  // ---- argument helpers ----

  static void arity(const Node& call, std::size_t lo, std::size_t hi) {
    const std::size_t n = call.args.size();
    if (n < lo || n > hi) {
      std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
      raise(ErrorKind::ArityError,
            call.name + " takes " + want + " argument(s), got " + std::to_string(n));
    }
  }

  Series series_arg(const Node& call, std::size_t i, std::size_t w) {
    return to_series(eval(*call.args[i], w), w);
  }

  FieldElem scalar_arg(const Node& call, std::size_t i, std::size_t w) {
    const Value v = eval(*call.args[i], w);
    if (v.is<FieldElem>()) return v.as<FieldElem>();
    if (v.is<PolyX>() && v.as<PolyX>().degree() <= 0) return v.as<PolyX>().coeff(0);
    type_error(call.name + " argument " + std::to_string(i + 1) + " must be a scalar, got a " +
               std::string(kind_name(v)));
  }

  mpq_class rational_arg(const Node& call, std::size_t i, std::size_t w) {
    const FieldElem f = scalar_arg(call, i, w);
    if (!f.is_constant()) {
      type_error(call.name + " argument " + std::to_string(i + 1) + " must not depend on r");
    }
    return f.to_rational();
  }

  std::size_t count_arg(const Node& call, std::size_t i, std::size_t w) {
    const mpq_class q = rational_arg(call, i, w);
    if (q.get_den() != 1 || q < 0 || q > 100000) {
      type_error(call.name + " argument " + std::to_string(i + 1) +
                 " must be a non-negative integer");
    }
    return q.get_num().get_ui();
  }

  std::string symbol_arg(const Node& call, std::size_t i, std::size_t w,
                         std::initializer_list<std::string_view> allowed) {
    const Value v = eval(*call.args[i], w);
    if (!v.is<Symbol>()) {
      type_error(call.name + " argument " + std::to_string(i + 1) + " must be a symbol");
    }
    const std::string& s = v.as<Symbol>().name;
    if (allowed.size() && std::find(allowed.begin(), allowed.end(), s) == allowed.end()) {
      type_error(call.name + " does not accept '" + s + "' as argument " + std::to_string(i + 1));
    }
    return s;
  }

  static std::vector<FieldElem> to_list(const Value& v, const std::string& what) {
    if (v.is<Series>()) return v.as<Series>().coeffs();
    if (!v.is<List>()) type_error(what + " must be a list");
    std::vector<FieldElem> out;
    for (const auto& item : v.as<List>().items) {
      if (item.is<FieldElem>()) {
        out.push_back(item.as<FieldElem>());
      } else if (item.is<PolyX>() && item.as<PolyX>().degree() <= 0) {
        out.push_back(item.as<PolyX>().coeff(0));
      } else {
        type_error(what + " entries must be scalars");
      }
    }
    return out;
  }

  std::vector<FieldElem> list_arg(const Node& call, std::size_t i, std::size_t w) {
    return to_list(eval(*call.args[i], w), call.name + " argument " + std::to_string(i + 1));
  }

  template <class T>
  T typed_arg(const Node& call, std::size_t i, std::size_t w, std::string_view want) {
    const Value v = eval(*call.args[i], w);
    if (!v.is<T>()) {
      type_error(call.name + " argument " + std::to_string(i + 1) + " must be a " +
                 std::string(want) + ", got a " + std::string(kind_name(v)));
    }
    return v.as<T>();
  }

  JFraction jfrac_arg(const Node& call, std::size_t i, std::size_t w) {
    return typed_arg<JFraction>(call, i, w, "jfraction");
  }

  SFraction sfrac_arg(const Node& call, std::size_t i, std::size_t w) {
    const Value v = eval(*call.args[i], w);
    if (v.is<SFraction>()) return v.as<SFraction>();
    return SFraction{to_list(v, call.name + " argument " + std::to_string(i + 1))};
  }

  Triangle triangle_arg(const Node& call, std::size_t i, std::size_t w) {
    return typed_arg<Triangle>(call, i, w, "triangle");
  }

  SquareMatrix matrix_arg(const Node& call, std::size_t i, std::size_t w) {
    const Value v = eval(*call.args[i], w);
    if (v.is<SquareMatrix>()) return v.as<SquareMatrix>();
    if (v.is<Triangle>()) return SquareMatrix::from_triangle(v.as<Triangle>());
    type_error(call.name + " argument " + std::to_string(i + 1) + " must be a matrix");
  }

  std::size_t coefficient_count(const Node& call, std::size_t i, std::size_t w) {
    return call.args.size() > i ? count_arg(call, i, w) : order_;
  }

  static const std::map<std::string, Builtin>& builtins();

  std::size_t order_;
};

Value map_entries(const Value& v, const std::function<FieldElem(const FieldElem&)>& f) {
  auto row = [&](const std::vector<FieldElem>& r) {
    std::vector<FieldElem> out;
    out.reserve(r.size());
    for (const auto& e : r) out.push_back(f(e));
    return out;
  };
  auto rows = [&](const std::vector<std::vector<FieldElem>>& m) {
    std::vector<std::vector<FieldElem>> out;
    for (const auto& r : m) out.push_back(row(r));
    return out;
  };
  return std::visit(
      [&](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FieldElem>) {
          return Value{f(x)};
        } else if constexpr (std::is_same_v<T, PolyX>) {
          return Value{PolyX(row(x.coeffs()))};
        } else if constexpr (std::is_same_v<T, Series>) {
          return Value{Series(row(x.coeffs()))};
        } else if constexpr (std::is_same_v<T, Triangle>) {
          return Value{Triangle{rows(x.rows)}};
        } else if constexpr (std::is_same_v<T, JFraction>) {
          return Value{JFraction{row(x.b), row(x.lam)}};
        } else if constexpr (std::is_same_v<T, SFraction>) {
          return Value{SFraction{row(x.s)}};
        } else if constexpr (std::is_same_v<T, SquareMatrix>) {
          return Value{SquareMatrix{rows(x.m)}};
        } else if constexpr (std::is_same_v<T, List>) {
          List out;
          for (const auto& item : x.items) out.items.push_back(map_entries(item, f));
          return Value{std::move(out)};
        } else {
          return Value{x};
        }
      },
      v.v);
}

using SeriesFn = Series (*)(const Series&);

Evaluator::Builtin series_op(SeriesFn f) {
  return [f](Evaluator& ev, const Node& c, std::size_t w) {
    Evaluator::arity(c, 1, 1);
    return Value{f(ev.series_arg(c, 0, w))};
  };
}

Series binomial_forward(const Series& g) { return binomial_transform(g, BinomialDirection::Forward); }
Series binomial_inverse(const Series& g) { return binomial_transform(g, BinomialDirection::Inverse); }
Series series_cosh(const Series& f) {
  return scale(add(exp(f), exp(neg(f))), FieldElem(mpq_class(1, 2)));
}
Series series_sinh(const Series& f) {
  return scale(sub(exp(f), exp(neg(f))), FieldElem(mpq_class(1, 2)));
}

Evaluator::Builtin riordan_builtin(RiordanKind kind) {
  return [kind](Evaluator& ev, const Node& c, std::size_t w) {
    Evaluator::arity(c, 3, 3);
    const std::size_t rows = ev.count_arg(c, 2, w);
    RiordanArray a{ev.series_at_least(*c.args[0], rows), ev.series_at_least(*c.args[1], rows), kind};
    return Value{riordan_to_triangle(a, rows)};
  };
}

Evaluator::Builtin deleham_builtin(bool delta1) {
  return [delta1](Evaluator& ev, const Node& c, std::size_t w) {
    Evaluator::arity(c, 3, 3);
    const auto rs = ev.list_arg(c, 0, w);
    const auto ss = ev.list_arg(c, 1, w);
    for (const auto* l : {&rs, &ss}) {
      for (const auto& e : *l) {
        if (!e.is_constant()) type_error(c.name + " entries must not depend on r");
      }
    }
    const std::size_t rows = ev.count_arg(c, 2, w);
    return Value{delta1 ? deleham_delta1(rs, ss, rows) : deleham(rs, ss, rows)};
  };
}

const std::map<std::string, Evaluator::Builtin>& Evaluator::builtins() {
  static const std::map<std::string, Builtin> table = [] {
    std::map<std::string, Builtin> t;
    t["P"] = series_op(pipeline_P);
    t["partialP"] = series_op(partial_P);
    t["reverseP"] = series_op(reverse_P);
    t["sumudu"] = series_op(sumudu);
    t["isumudu"] = series_op(inverse_sumudu);
    t["binom"] = series_op(binomial_forward);
    t["ibinom"] = series_op(binomial_inverse);
    t["revert"] = series_op(revert);
    t["gfrev"] = series_op(gf_revert);
    t["logd"] = series_op(log_derivative);
    t["diff"] = series_op(derivative);
    t["integ"] = series_op(integrate);
    t["log"] = series_op(log);
    t["exp"] = series_op(exp);
    t["cosh"] = series_op(series_cosh);
    t["sinh"] = series_op(series_sinh);
    t["invert"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 2, 2);
      return Value{invert_transform(ev.series_arg(c, 0, w), ev.scalar_arg(c, 1, w))};
    };
    t["powq"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 2, 2);
      return Value{pow_rational(ev.series_arg(c, 0, w), ev.rational_arg(c, 1, w))};
    };
    t["jfrac"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 1, 2);
      JFraction j = c.args.size() == 1 ? ev.jfrac_arg(c, 0, w)
                                       : JFraction{ev.list_arg(c, 0, w), ev.list_arg(c, 1, w)};
      return Value{jfrac_to_series(j, std::min(w, known_precision(j)))};
    };
    t["sfrac"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 1, 1);
      return Value{sfrac_to_series(ev.sfrac_arg(c, 0, w), w)};
    };
    t["tojfrac"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 1, 2);
      const std::size_t n = ev.coefficient_count(c, 1, w);
      return Value{series_to_jfrac(ev.series_at_least(*c.args[0], n))};
    };
    t["tosfrac"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 1, 2);
      const std::size_t n = ev.coefficient_count(c, 1, w);
      return Value{series_to_sfrac(ev.series_at_least(*c.args[0], n))};
    };
    t["contract"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 1, 1);
      return Value{contract_s_to_j(ev.sfrac_arg(c, 0, w))};
    };
    t["deleham"] = deleham_builtin(false);
    t["deleham1"] = deleham_builtin(true);
    t["tinv"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 4, 4);
      const TPattern p{ev.scalar_arg(c, 0, w), ev.scalar_arg(c, 1, w), ev.scalar_arg(c, 2, w)};
      return Value{t_inverse(p, ev.count_arg(c, 3, w))};
    };
    t["tfwd"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 1, 1);
      return Value{t_forward(ev.jfrac_arg(c, 0, w))};
    };
    t["triangle"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 2, 3);
      const std::size_t rows = ev.count_arg(c, 1, w);
      const bool egf = c.args.size() == 3 && ev.symbol_arg(c, 2, w, {"ogf", "egf"}) == "egf";
      return Value{triangle_from_gf(ev.series_at_least(*c.args[0], rows), rows,
                                    egf ? GfMode::Egf : GfMode::Ogf)};
    };
    t["reverse"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 1, 1);
      return Value{reversal(ev.triangle_arg(c, 0, w))};
    };
    t["matmul"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 2, 2);
      const Value a = ev.eval(*c.args[0], w);
      const Value b = ev.eval(*c.args[1], w);
      if (a.is<Triangle>() && b.is<Triangle>()) return Value{matmul(a.as<Triangle>(), b.as<Triangle>())};
      if (a.is<SquareMatrix>() && b.is<SquareMatrix>()) {
        return Value{matmul(a.as<SquareMatrix>(), b.as<SquareMatrix>())};
      }
      type_error("matmul needs two triangles or two matrices");
    };
    t["inv"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 1, 1);
      return Value{tri_inverse(ev.triangle_arg(c, 0, w))};
    };
    t["Bmat"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 1, 1);
      return Value{binomial_matrix(ev.count_arg(c, 0, w))};
    };
    t["riordan"] = riordan_builtin(RiordanKind::Ordinary);
    t["eriordan"] = riordan_builtin(RiordanKind::Exponential);
    t["prodmat"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 3, 4);
      const std::size_t size = ev.count_arg(c, 2, w);
      const bool ogf = c.args.size() == 4 && ev.symbol_arg(c, 3, w, {"ogf", "egf"}) == "ogf";
      RiordanArray a{ev.series_at_least(*c.args[0], size + 1),
                     ev.series_at_least(*c.args[1], size + 1),
                     ogf ? RiordanKind::Ordinary : RiordanKind::Exponential};
      return Value{production_matrix(a, size)};
    };
    t["recurrence"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 1, 1);
      const RecurrenceCoeffs rc = recurrence_from_production(ev.matrix_arg(c, 0, w));
      return Value{JFraction{rc.alpha, rc.beta}};
    };
    t["orthopoly"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 2, 2);
      const Value v = ev.eval(*c.args[0], w);
      RecurrenceCoeffs rc;
      if (v.is<JFraction>()) {
        rc = {v.as<JFraction>().b, v.as<JFraction>().lam};
      } else if (v.is<SquareMatrix>()) {
        rc = recurrence_from_production(v.as<SquareMatrix>());
      } else {
        type_error("orthopoly needs recurrence data or a production matrix");
      }
      return Value{orthopoly_triangle(rc, ev.count_arg(c, 1, w))};
    };
    t["oracle"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 2, 3);
      const std::string name = ev.symbol_arg(c, 0, w, {});
      if (c.args.size() == 3) {
        const long n = static_cast<long>(ev.count_arg(c, 1, w));
        const long k = static_cast<long>(ev.count_arg(c, 2, w));
        return Value{oracle(name, n, k)};
      }
      const long rows = static_cast<long>(ev.count_arg(c, 1, w));
      Triangle tri;
      for (long n = 0; n < rows; ++n) {
        std::vector<FieldElem> row;
        for (long k = 0; k <= n; ++k) row.push_back(oracle(name, n, k));
        tri.rows.push_back(std::move(row));
      }
      return Value{std::move(tri)};
    };
    t["subs"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 2, 2);
      return substitute_r(ev.eval(*c.args[0], w), ev.scalar_arg(c, 1, w));
    };
    t["gf"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 1, 1);
      return Value{triangle_to_gf(ev.triangle_arg(c, 0, w))};
    };
    t["rowsums"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 1, 1);
      return Value{row_sums(ev.triangle_arg(c, 0, w))};
    };
    t["behead"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 1, 1);
      return Value{behead(ev.triangle_arg(c, 0, w))};
    };
    t["matrix"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 1, 1);
      const Value v = ev.eval(*c.args[0], w);
      if (!v.is<List>()) type_error("matrix needs a list of rows");
      SquareMatrix m;
      for (const auto& row : v.as<List>().items) m.m.push_back(to_list(row, "matrix row"));
      for (const auto& row : m.m) {
        if (row.size() != m.m.size()) type_error("matrix rows must form a square");
      }
      return Value{std::move(m)};
    };
    t["apply"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 2, 2);
      const SquareMatrix m = ev.matrix_arg(c, 0, w);
      const Value v = ev.eval(*c.args[1], w);
      const Series s = v.is<List>() ? Series(to_list(v, "apply argument 2")) : to_series(v, w);
      return Value{apply(m, s)};
    };
    t["rapply"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 3, 3);
      const RiordanArray a{ev.series_arg(c, 0, w), ev.series_arg(c, 1, w), RiordanKind::Ordinary};
      return Value{riordan_apply(a, ev.series_arg(c, 2, w))};
    };
    t["trunc"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 2, 2);
      const std::size_t n = ev.count_arg(c, 1, w);
      return Value{ev.series_at_least(*c.args[0], n)};
    };
    t["moment"] = [](Evaluator& ev, const Node& c, std::size_t w) {
      arity(c, 3, 3);
      auto poly = [&](std::size_t i) {
        const Value v = ev.eval(*c.args[i], w);
        if (v.is<FieldElem>()) return PolyX{v.as<FieldElem>()};
        if (v.is<PolyX>()) return v.as<PolyX>();
        type_error("moment arguments 2 and 3 must be polynomials in x");
      };
      const PolyX p = poly(1);
      const PolyX q = poly(2);
      const long deg = (p * q).degree();
      const Series mu = ev.series_at_least(*c.args[0], static_cast<std::size_t>(std::max(deg, 0L)) + 1);
      return Value{moment_functional(mu, p, q)};
    };
    return t;
  }();
  return table;
}

}  // namespace

Value substitute_r(const Value& v, const FieldElem& at) {
  return map_entries(v, [&](const FieldElem& e) { return e.substitute(at); });
}

Value evaluate(const Node& ast, const Env& env) {
  if (env.order == 0) raise(ErrorKind::TypeErrorValue, "order must be at least 1");
  Evaluator ev(env.order);
  Value v = ev.eval_top(ast);
  if (env.r_value) v = substitute_r(v, FieldElem(*env.r_value));
  return v;
}

Value evaluate(std::string_view text, const Env& env) { return evaluate(*parse(text), env); }

}  // namespace seqpipe::dsl
