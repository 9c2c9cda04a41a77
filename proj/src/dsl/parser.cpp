#include <algorithm>

#include "lexer.hpp"
#include "seqpipe/dsl/ast.hpp"
#include "seqpipe/oracle.hpp"

namespace seqpipe::dsl {

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "P",        "partialP", "reverseP", "sumudu",   "isumudu",  "invert",   "binom",
      "ibinom",   "revert",   "gfrev",    "logd",     "diff",     "integ",    "log",
      "exp",      "powq",     "jfrac",    "sfrac",    "tojfrac",  "tosfrac",  "contract",
      "deleham",  "deleham1", "tinv",     "tfwd",     "triangle", "reverse",  "matmul",
      "inv",      "Bmat",     "riordan",  "eriordan", "prodmat",  "recurrence", "orthopoly",
      "oracle",
      // conveniences beyond the core set
      "cosh",     "sinh",     "subs",     "gf",       "rowsums",  "behead",   "matrix",
      "apply",    "rapply",   "trunc",    "moment"};
  return names;
}

const std::vector<std::string>& symbol_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v = {"ogf", "egf", "forward", "inverse"};
    for (const auto& o : oracle_names()) v.push_back(o);
    return v;
  }();
  return names;
}

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

NodePtr make(NodeKind kind, Span span, std::vector<NodePtr> args = {}) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->span = span;
  n->args = std::move(args);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  NodePtr run() {
    NodePtr e = expr();
    if (peek().kind != TokKind::End) fail({"operator", "end of input"});
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string msg = "unexpected " + std::string(describe(t.kind));
    if (t.kind == TokKind::Int || t.kind == TokKind::Ident) msg += " '" + t.text + "'";
    msg += ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    throw ParseError(t.offset, std::move(expected), msg);
  }

  void expect(TokKind k) {
    if (peek().kind != k) fail({std::string(describe(k))});
    take();
  }

  std::size_t end_of_prev() const { return toks_[pos_ - 1].offset + toks_[pos_ - 1].text.size(); }

  NodePtr expr() {
    NodePtr lhs = term();
    while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
      const NodeKind k = take().kind == TokKind::Plus ? NodeKind::Add : NodeKind::Sub;
      NodePtr rhs = term();
      lhs = make(k, {lhs->span.begin, rhs->span.end}, {lhs, rhs});
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = unary(true);
    while (peek().kind == TokKind::Star || peek().kind == TokKind::Slash) {
      const bool is_div = take().kind == TokKind::Slash;
      NodePtr rhs = unary(!is_div);
      lhs = make(is_div ? NodeKind::Div : NodeKind::Mul, {lhs->span.begin, rhs->span.end},
                 {lhs, rhs});
    }
    return lhs;
  }

  NodePtr unary(bool allow_rational) {
    if (peek().kind == TokKind::Minus) {
      const std::size_t start = take().offset;
      NodePtr operand = unary(allow_rational);
      return make(NodeKind::Neg, {start, operand->span.end}, {operand});
    }
    return factor(allow_rational);
  }

  NodePtr factor(bool allow_rational) {
    NodePtr base = atom(allow_rational);
    if (peek().kind != TokKind::Caret) return base;
    take();
    bool negative = false;
    if (peek().kind == TokKind::Minus) {
      take();
      negative = true;
    }
    if (peek().kind != TokKind::Int) fail({"integer exponent"});
    const Token& t = peek();
    const mpz_class e(t.text);
    if (e > kMaxExponent) {
      throw ParseError(t.offset, {"integer exponent"},
                       "exponent " + t.text + " exceeds the limit of " +
                           std::to_string(kMaxExponent));
    }
    take();
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Pow;
    n->exponent = negative ? -e.get_si() : e.get_si();
    n->args = {base};
    n->span = {base->span.begin, end_of_prev()};
    return n;
  }

  NodePtr atom(bool allow_rational) {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::Int: {
        take();
        auto n = std::make_shared<Node>();
        n->kind = NodeKind::Integer;
        n->value = mpq_class(mpz_class(t.text));
        n->span = {t.offset, t.offset + t.text.size()};
        if (allow_rational && peek().kind == TokKind::Slash && peek(1).kind == TokKind::Int &&
            peek(2).kind != TokKind::Caret) {
          take();
          const Token& d = take();
          const mpz_class den(d.text);
          if (den == 0) throw ParseError(d.offset, {"nonzero integer"}, "zero denominator");
          n->kind = NodeKind::Rational;
          n->value = mpq_class(mpz_class(t.text), den);
          n->value.canonicalize();
          n->span.end = d.offset + d.text.size();
        }
        return n;
      }
      case TokKind::Ident: {
        take();
        const Span span{t.offset, t.offset + t.text.size()};
        if (t.text == "x") return make(NodeKind::VarX, span);
        if (t.text == "r") return make(NodeKind::ParamR, span);
        if (peek().kind == TokKind::LParen) {
          if (!contains(builtin_names(), t.text)) {
            throw ParseError(t.offset, {"function name"}, "unknown function '" + t.text + "'");
          }
          take();
          auto n = std::make_shared<Node>();
          n->kind = NodeKind::Call;
          n->name = t.text;
          n->args = args(TokKind::RParen);
          n->span = {t.offset, end_of_prev()};
          return n;
        }
        if (!contains(symbol_names(), t.text)) {
          throw ParseError(t.offset, {"'x'", "'r'", "function call", "symbol"},
                           "unknown identifier '" + t.text + "'");
        }
        auto n = std::make_shared<Node>();
        n->kind = NodeKind::Symbol;
        n->name = t.text;
        n->span = span;
        return n;
      }
      case TokKind::LParen: {
        take();
        NodePtr inner = expr();
        expect(TokKind::RParen);
        return inner;
      }
      case TokKind::LBracket: {
        const std::size_t start = take().offset;
        auto n = std::make_shared<Node>();
        n->kind = NodeKind::List;
        n->args = args(TokKind::RBracket);
        n->span = {start, end_of_prev()};
        return n;
      }
      default:
        fail({"integer", "'x'", "'r'", "'('", "'['", "identifier", "'-'"});
    }
  }

  std::vector<NodePtr> args(TokKind close) {
    std::vector<NodePtr> out;
    if (peek().kind == close) {
      take();
      return out;
    }
    while (true) {
      out.push_back(expr());
      if (peek().kind == TokKind::Comma) {
        take();
        continue;
      }
      if (peek().kind == close) {
        take();
        return out;
      }
      fail({"','", std::string(describe(close))});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

NodePtr parse(std::string_view text) { return Parser(text).run(); }

bool same_tree(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.value != b.value || a.exponent != b.exponent || a.name != b.name ||
      a.args.size() != b.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!same_tree(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

NodePtr bind_r(const NodePtr& n, const mpq_class& v) {
  if (n->kind == NodeKind::ParamR) {
    auto lit = std::make_shared<Node>();
    lit->kind = v.get_den() == 1 ? NodeKind::Integer : NodeKind::Rational;
    lit->value = abs(v);
    lit->span = n->span;
    if (v >= 0) return lit;
    return make(NodeKind::Neg, n->span, {lit});
  }
  if (n->args.empty()) return n;
  auto copy = std::make_shared<Node>(*n);
  for (auto& a : copy->args) a = bind_r(a, v);
  return copy;
}

}  // namespace seqpipe::dsl
