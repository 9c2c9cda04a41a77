#include "doctest.h"

#include <set>

#include "seqpipe/dsl/ast.hpp"
#include "seqpipe/dsl/eval.hpp"
#include "seqpipe/dsl/format.hpp"
#include "seqpipe/errors.hpp"
#include "seqpipe/fixtures.hpp"

#include "../support/gen.hpp"

using namespace seqpipe;
using namespace seqpipe::dsl;

namespace {

const std::vector<std::string> kCorpus = {
    "x",
    "r",
    "1/2",
    "-x^2 + 3*x - 7/3",
    "(1+x)^3",
    "1/(1-x)",
    "1/(1-x)^-2",
    "1/(1-r*x)",
    "(1+(r-1)*x)/((1-x)*(1+r*x))",
    "2/3/4",
    "x/2^2",
    "P(1/(1-x^2))",
    "partialP(1/(1-x^2))",
    "reverseP(1/(2-exp(x)))",
    "sumudu(exp(x))",
    "isumudu(1/(1-x))",
    "invert(1/(1-x^2), -1)",
    "binom(1/(1-x))",
    "ibinom(1/(1-2*x))",
    "revert(x - x^2)",
    "gfrev(1 - x)",
    "logd(exp(2*x))",
    "diff(integ(1/(1-x)))",
    "log(1/(1-x))",
    "cosh(x) - sinh(x)",
    "powq(1 - 4*x, 1/2)",
    "jfrac([1,4,7,10],[2,8,18,32])",
    "sfrac([1,2,2,4,3,6])",
    "tojfrac(sumudu(1/(2-exp(x))), 7)",
    "tosfrac(1/(1-x-x^2))",
    "contract(sfrac([1,2,2,4,3]))",
    "deleham([0,1,0,2],[1,1,2,2],4)",
    "deleham1([0,1,0,1],[1,0,1,0],4)",
    "tinv(1, r+1, r, 4)",
    "tfwd(tinv(1, r+1, r, 4))",
    "triangle(1/(1+r*(1-exp(x))), 6, egf)",
    "triangle(gfrev(1/(1+(r+1)*x+r*x^2)), 5, ogf)",
    "reverse(oracle(E1, 5))",
    "matmul(Bmat(4), inv(Bmat(4)))",
    "riordan(1/(1-x), x/(1-x), 5)",
    "eriordan(1, exp(x)-1, 5)",
    "prodmat(1/(1+r*(1-exp(x))), (exp(x)-1)/(1+r*(1-exp(x))), 4)",
    "recurrence(prodmat(1/(1+r*(1-exp(x))), (exp(x)-1)/(1+r*(1-exp(x))), 4))",
    "orthopoly(recurrence(prodmat(1/(1+r*(1-exp(x))), (exp(x)-1)/(1+r*(1-exp(x))), 4)), 3)",
    "oracle(N3, 6, 3)",
    "subs(1/(1-r*x), 2)",
    "rowsums(oracle(N1, 5))",
    "behead(oracle(A019538, 5))",
    "apply(matrix([[1,0],[1,1]]), [1,2])",
    "trunc(1/(1-x), 3)",
    "moment(sumudu(1/(2-exp(x))), [1], [1])",
    "gf(oracle(N2, 4))",
};

std::vector<std::string> corpus_with_fixtures() {
  std::vector<std::string> all = kCorpus;
  for (const auto& f : fixtures()) all.push_back(f.build);
  return all;
}

std::string eval_json(std::string_view text, Env env = {}) { return to_json(evaluate(text, env)).dump(); }

}  // namespace

TEST_CASE("parser structure") {
  const NodePtr p = parse("P(1/(1-x^2))");
  CHECK(p->kind == NodeKind::Call);
  CHECK(p->name == "P");
  const NodePtr d = parse("deleham([0,1,0,2],[1,1,2,2])");
  CHECK(d->args.size() == 2);
  CHECK(d->args[0]->kind == NodeKind::List);
  CHECK(parse("2/3")->kind == NodeKind::Rational);
  CHECK(parse("1/2/3")->kind == NodeKind::Div);
}

TEST_CASE("parse errors carry offsets") {
  auto offset = [](std::string_view s) {
    try {
      parse(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  CHECK(offset("1+*2") == 2);
  CHECK(offset("1/(1-x") == 6);
  CHECK(offset("foo(x)") == 0);
  CHECK(offset("x^100") >= 0);
  CHECK(offset("x^r") == 2);
  CHECK(offset("") == 0);
}

TEST_CASE("property: print then parse is a fixed point on the corpus") {
  const auto all = corpus_with_fixtures();
  CHECK(kCorpus.size() >= 30);
  for (const auto& s : all) {
    CAPTURE(s);
    const NodePtr a = parse(s);
    const std::string printed = print(*a);
    const NodePtr b = parse(printed);
    CHECK(same_tree(*a, *b));
    CHECK(print(*b) == printed);
  }
}

TEST_CASE("evaluation examples") {
  const Value fub = evaluate("sumudu(P(1/(1-x^2)))", Env{8, std::nullopt});
  CHECK(format(fub, Format::Table) == "1, 1, 3, 13, 75, 541, 4683, 47293\n");
  const Value x = evaluate("x", Env{3, std::nullopt});
  CHECK(x.as<Series>() == Series::x(3));
  const Value t = evaluate("triangle(1/(1+r*(1-exp(x))), 6, egf)", Env{});
  CHECK(format(t, Format::Csv).rfind("\"1\"\n\"0\",\"1\"\n\"0\",\"1\",\"2\"\n", 0) == 0);
  CHECK(format(evaluate("1+r*x^2", Env{3, std::nullopt}), Format::Table) == "1, 0, r\n");
  CHECK(eval_json("sumudu(1/(2-exp(x)))", Env{6, std::nullopt}) ==
        R"({"kind":"series","order":6,"entries":[["1"],["1"],["3"],["13"],["75"],["541"]]})");
}

TEST_CASE("evaluation errors") {
  auto kind = [](std::string_view s) {
    try {
      evaluate(s, Env{});
    } catch (const MathError& e) {
      return e.kind();
    }
    return ErrorKind::ArityError;  // unreachable in these cases
  };
  CHECK(kind("revert(1+x)") == ErrorKind::NotReversible);
  CHECK(kind("P(1+x)") == ErrorKind::PipelinePrecondition);
  CHECK(kind("triangle(1/(1-x), 3, egf, 4)") == ErrorKind::ArityError);
  CHECK(kind("deleham(x, [1], 3)") == ErrorKind::TypeErrorValue);
  CHECK(kind("deleham([r], [1], 3)") == ErrorKind::TypeErrorValue);
  CHECK(kind("riordan(1/(1-x), 0*x, 4)") == ErrorKind::NotReversible);
  CHECK(kind("tfwd(tojfrac(jfrac([r,2*r,3*r],[2*r,6*r]), 5))") == ErrorKind::PatternMismatch);
  CHECK(kind("1/x") == ErrorKind::NonUnitConstantTerm);
  CHECK_THROWS_AS(evaluate("1/(1-r)", Env{4, mpq_class(1)}), MathError);
}

TEST_CASE("error spans point at the failing subexpression") {
  try {
    evaluate("1 + revert(1+x)", Env{});
    FAIL("expected an error");
  } catch (const MathError& e) {
    REQUIRE(e.span().has_value());
    CHECK(e.span()->begin == 4);
  }
}

TEST_CASE("property: evaluation is deterministic and JSON round trips byte-identically") {
  for (const auto& s : corpus_with_fixtures()) {
    CAPTURE(s);
    Value v;
    try {
      v = evaluate(s, Env{});
    } catch (const MathError&) {
      continue;  // a few corpus entries need a larger order; fixtures cover them
    }
    const std::string once = to_json(v).dump();
    CHECK(to_json(from_json(nlohmann::ordered_json::parse(once))).dump() == once);
    CHECK(from_json(nlohmann::ordered_json::parse(once)) == v);
    CHECK(eval_json(s) == once);
  }
}

TEST_CASE("property: binding r after evaluation equals binding it in the source") {
  gen::Rng g(501);
  const std::vector<std::string> exprs = {
      "P((1+(r-1)*x)/((1-x)*(1+r*x)))", "gfrev(1/(1+(r+1)*x+r*x^2))",
      "jfrac(tinv(1, r+1, r, 5))",      "invert((1-2*x)/(1-2*x-r*x^2), 1)",
      "tojfrac(sumudu(1/(1+r*(1-exp(x)))), 7)", "prodmat(1/(1+r*(1-exp(x))), (exp(x)-1)/(1+r*(1-exp(x))), 4)",
  };
  for (int i = 0; i < 12; ++i) {
    const mpq_class v(gen::small_int(g, -5, 5), gen::small_int(g, 1, 4));
    // r(r+1) vanishes here and the fractions terminate early
    if (v == 0 || v == -1) continue;
    for (const auto& s : exprs) {
      CAPTURE(s);
      CAPTURE(v.get_str());
      Value late, early;
      try {
        late = evaluate(s, Env{8, v});
      } catch (const MathError& e) {
        CHECK(e.kind() != ErrorKind::PatternMismatch);
        continue;
      }
      try {
        early = evaluate(*bind_r(parse(s), v), Env{8, std::nullopt});
      } catch (const MathError&) {
        continue;  // degenerate at this r before specialization; not comparable
      }
      CHECK(to_json(late).dump() == to_json(early).dump());
    }
  }
}

TEST_CASE("formats") {
  const Value t = evaluate("oracle(N3, 3)", Env{});
  CHECK(format(t, Format::Table) == "1\n1, 1\n1, 3, 1\n");
  CHECK(format(t, Format::Csv) == "\"1\"\n\"1\",\"1\"\n\"1\",\"3\",\"1\"\n");
  CHECK(parse_format("json") == Format::Json);
  CHECK_FALSE(parse_format("xml").has_value());
  const Value q = evaluate("1/(1+r)", Env{});
  CHECK(to_json(q).dump() == R"({"kind":"scalar","entries":[{"num":["1"],"den":["1","1"]}]})");
}

TEST_CASE("fixture runner") {
  const Report empty = run_fixtures(std::vector<std::string>{});
  CHECK(empty.cases.empty());
  CHECK(empty.ok());
  const Report unknown = run_fixtures(std::vector<std::string>{"no-such-fixture"});
  CHECK(unknown.failed() == 1);
  const Report one = run_fixtures(std::vector<std::string>{"fubini-pipeline", "nonelementary"});
  CHECK(one.passed() == 2);
  CHECK(run_fixture({"broken", "1/(1-x)", Expect::Sequence, "1, 1, 2", "self-test"}).detail.find("entry 2") !=
        std::string::npos);
}

TEST_CASE("every fixture passes") {
  const Report all = run_fixtures(std::nullopt);
  CHECK(all.cases.size() >= 150);
  for (const auto& c : all.cases) {
    CAPTURE(c.id);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("fixture ids are unique and loci are filled in") {
  std::set<std::string> ids;
  for (const auto& f : fixtures()) {
    CHECK(ids.insert(f.id).second);
    CHECK_FALSE(f.locus.empty());
  }
}
