#include "doctest.h"

#include "seqpipe/errors.hpp"
#include "seqpipe/transforms.hpp"
#include "seqpipe/triangles.hpp"

#include "../support/gen.hpp"

using namespace seqpipe;

namespace {

FieldElem R() { return FieldElem::r(); }
FieldElem Q(long p, long q = 1) { return FieldElem(mpq_class(p, q)); }

Series ints(std::initializer_list<long> v) {
  std::vector<FieldElem> c;
  for (long x : v) c.emplace_back(x);
  return Series(std::move(c));
}

Series rat(std::initializer_list<FieldElem> num, std::initializer_list<FieldElem> den, std::size_t n) {
  return from_ratfun(PolyX(num), PolyX(den), n);
}

Series e_ax(const FieldElem& a, std::size_t n) { return exp(scale(Series::x(n), a)); }

// 1/(1 + a (1 - e^x))
Series bell_like(const FieldElem& a, std::size_t n) {
  return div(Series::one(n), add(Series::one(n), scale(sub(Series::one(n), e_ax(Q(1), n)), a)));
}

const std::vector<mpq_class> kSamples = {mpq_class(0), mpq_class(1), mpq_class(2), mpq_class(-3),
                                         mpq_class(1, 2), mpq_class(-2, 7)};

}  // namespace

TEST_CASE("sumudu pair") {
  CHECK(sumudu(ints({1, 1, 1, 1})) == ints({1, 1, 2, 6}));
  CHECK(inverse_sumudu(ints({1, 1, 2, 6})) == ints({1, 1, 1, 1}));
  gen::Rng g(201);
  for (int i = 0; i < 40; ++i) {
    const Series s = gen::series(g, 1 + i % 9, true);
    CHECK(sumudu(inverse_sumudu(s)) == s);
    CHECK(inverse_sumudu(sumudu(s)) == s);
  }
}

TEST_CASE("pipeline on 1/(1-x^2) gives Fubini numbers") {
  const Series f = sumudu(pipeline_P(rat({Q(1)}, {Q(1), Q(0), Q(-1)}, 10)));
  CHECK(f == ints({1, 1, 3, 13, 75, 541, 4683, 47293, 545835}));
  const auto tr = pipeline_P_trace(rat({Q(1)}, {Q(1), Q(0), Q(-1)}, 8));
  CHECK(tr.F == pipeline_P(rat({Q(1)}, {Q(1), Q(0), Q(-1)}, 8)));
  CHECK(tr.h[1] == Q(1));
}

TEST_CASE("pipeline precondition") {
  CHECK_THROWS_AS(pipeline_P(ints({1, 1, 0, 0})), MathError);
  CHECK_THROWS_AS(pipeline_P(ints({2, 0, 0, 0})), MathError);
  CHECK(pipeline_P(ints({1, 0, 0, 0, 0})).truncated(3) == ints({1, 0, 0}));
}

TEST_CASE("INVERT heads and additivity") {
  const Series g = rat({Q(1)}, {Q(1), Q(0), Q(-1)}, 9);
  CHECK(invert_transform(g, Q(1)).truncated(7) == ints({1, 1, 2, 3, 5, 8, 13}));
  CHECK(invert_transform(g, Q(-1)).truncated(6) == ints({1, -1, 2, -3, 5, -8}));
  gen::Rng gg(202);
  for (int i = 0; i < 40; ++i) {
    const Series s = gen::series(gg, 7, true);
    const FieldElem a = gen::elem(gg), b = gen::elem(gg);
    CHECK(invert_transform(invert_transform(s, a), b) == invert_transform(s, a + b));
  }
}

TEST_CASE("binomial pair") {
  CHECK(binomial_transform(ints({1, 0, 0, 0}), BinomialDirection::Forward) == ints({1, 1, 1, 1}));
  gen::Rng g(203);
  for (int i = 0; i < 40; ++i) {
    const Series s = gen::series(g, 8, true);
    CHECK(binomial_transform(binomial_transform(s, BinomialDirection::Forward), BinomialDirection::Inverse) == s);
    CHECK(binomial_transform(binomial_transform(s, BinomialDirection::Inverse), BinomialDirection::Forward) == s);
  }
}

TEST_CASE("binomial transform on the family matches the inverse binomial of the text") {
  // ibinom((1+(r-1)x)/((1-x)(1+rx))) = (1+rx)/(1+(r+1)x)
  const Series g1 = rat({Q(1), R() - Q(1)}, {Q(1), R() - Q(1), -R()}, 9);
  CHECK(binomial_transform(g1, BinomialDirection::Inverse) == rat({Q(1), R()}, {Q(1), R() + Q(1)}, 9));
}

TEST_CASE("right multiplication by B is r -> r+1 on the family") {
  const std::size_t n = 8;
  auto fam = [&](const FieldElem& s) { return rat({Q(1), s - Q(1)}, {Q(1), s - Q(1), -s}, n); };
  const Triangle t = triangle_from_gf(fam(R()), n, GfMode::Ogf);
  const Triangle shifted = triangle_from_gf(fam(R() + Q(1)), n, GfMode::Ogf);
  CHECK(matmul(t, binomial_matrix(n)) == shifted);
}

TEST_CASE("pipeline claims match closed forms built from kernel primitives") {
  const std::size_t n = 11;
  // (1+(r-1)x)/((1-x)(1+rx)) -> 1/(1+r(1-e^x))
  CHECK(pipeline_P(rat({Q(1), R() - Q(1)}, {Q(1), R() - Q(1), -R()}, n)) == bell_like(R(), n - 1));
  CHECK(pipeline_P(rat({Q(1), R() - Q(1)}, {Q(1), R() - Q(1), -R()}, n)).prec() == n - 1);
  // (1-(r+1)x)/((1-x)(1-rx)) -> 1/(1+r(e^x-1))
  CHECK(pipeline_P(rat({Q(1), -(R() + Q(1))}, {Q(1), -(R() + Q(1)), R()}, n)) == bell_like(-R(), n - 1));
  // 1/(1-x^2) -> 1/(2-e^x)
  CHECK(pipeline_P(rat({Q(1)}, {Q(1), Q(0), Q(-1)}, n)) == bell_like(Q(1), n - 1));
  // (1-2x)/(1-2x-rx^2) -> (1+r(1-e^(2x)))^(-1/2)
  CHECK(pipeline_P(rat({Q(1), Q(-2)}, {Q(1), Q(-2), -R()}, n)) ==
        pow_rational(add(Series::one(n - 1), scale(sub(Series::one(n - 1), e_ax(Q(2), n - 1)), R())),
                     mpq_class(-1, 2)));
  // (1-3x-(r-2)x^2)/((1-x)(1-2x-2rx^2)) -> (1+2r(1-e^x))^(-1/2)
  const FieldElem two_r = Q(2) * R();
  CHECK(pipeline_P(rat({Q(1), Q(-3), Q(2) - R()}, {Q(1), Q(-3), Q(2) - two_r, two_r}, n)) ==
        pow_rational(bell_like(two_r, n - 1), mpq_class(1, 2)));
}

TEST_CASE("property: pipeline matches the step-by-step oracle at numeric r") {
  const std::size_t n = 10;
  const Series fam = rat({Q(1), R() - Q(1)}, {Q(1), R() - Q(1), -R()}, n);
  const Series p = pipeline_P(fam);
  for (const auto& r : kSamples) CHECK(qs::at(p, r) == qs::pipeline(qs::at(fam, r)));

  gen::Rng g(204);
  for (int i = 0; i < 25; ++i) {
    auto c = gen::series(g, 9).coeffs();
    c[0] = Q(1);
    c[1] = Q(0);
    const Series s(c);
    CHECK(qs::at(pipeline_P(s), 0) == qs::pipeline(qs::at(s, 0)));
  }
}

TEST_CASE("property: reverse_P and pipeline_P are mutually inverse") {
  gen::Rng g(205);
  for (int i = 0; i < 20; ++i) {
    auto c = gen::series(g, 10, i % 3 == 0).coeffs();
    c[0] = Q(1);
    c[1] = Q(0);
    const Series s(c);
    const Series img = pipeline_P(sumudu(s));
    CHECK(reverse_P(img) == s.truncated(reverse_P(img).prec()));
    CHECK(reverse_P(img).prec() >= 8);

    auto d = gen::series(g, 10, i % 3 == 1).coeffs();
    d[0] = Q(1);
    const Series F(d);
    const Series pre = reverse_P(F);
    CHECK(pipeline_P(sumudu(pre)) == F.truncated(pipeline_P(sumudu(pre)).prec()));
  }
}

TEST_CASE("reverse_P examples") {
  CHECK(reverse_P(ints({1, 0, 0, 0})) == ints({1, 0, 0, 0, 0}).truncated(reverse_P(ints({1, 0, 0, 0})).prec()));
  const Series fub = bell_like(Q(1), 10);
  CHECK(sumudu(reverse_P(fub)).truncated(8) == ints({1, 0, 1, 0, 1, 0, 1, 0}));
  CHECK_THROWS_AS(reverse_P(ints({2, 0, 0})), MathError);
}

TEST_CASE("partial pipeline") {
  const Series g = rat({Q(1)}, {Q(1), Q(0), Q(-1)}, 8);
  CHECK(partial_P(g) == log_derivative(inverse_sumudu(g)));
}
