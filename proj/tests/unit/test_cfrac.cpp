#include "doctest.h"

#include "seqpipe/cfrac.hpp"
#include "seqpipe/errors.hpp"
#include "seqpipe/transforms.hpp"
#include "seqpipe/triangles.hpp"

#include "../support/gen.hpp"

using namespace seqpipe;

namespace {

FieldElem R() { return FieldElem::r(); }
FieldElem Q(long p, long q = 1) { return FieldElem(mpq_class(p, q)); }

std::vector<FieldElem> fe(std::initializer_list<long> v) {
  std::vector<FieldElem> c;
  for (long x : v) c.emplace_back(x);
  return c;
}

Series ints(std::initializer_list<long> v) { return Series(fe(v)); }

// Catalan numbers by their convolution recurrence.
Series catalan(std::size_t n) {
  std::vector<mpz_class> c{1};
  for (std::size_t k = 1; k < n; ++k) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < k; ++i) s += c[i] * c[k - 1 - i];
    c.push_back(s);
  }
  std::vector<FieldElem> out;
  for (auto& v : c) out.emplace_back(v);
  return Series(out);
}

Series fubini(std::size_t n) {
  // a(n) = sum_k C(n,k) a(n-k), a(0) = 1
  std::vector<mpz_class> a{1};
  for (std::size_t m = 1; m < n; ++m) {
    mpz_class s = 0, c = 1;
    for (std::size_t k = 1; k <= m; ++k) {
      c = c * (m - k + 1) / k;
      s += c * a[m - k];
    }
    a.push_back(s);
  }
  std::vector<FieldElem> out;
  for (auto& v : a) out.emplace_back(v);
  return Series(out);
}

}  // namespace

TEST_CASE("jfrac evaluation examples") {
  CHECK(jfrac_to_series({fe({1, 4, 7, 10, 13}), fe({2, 8, 18, 32})}, 6) == fubini(6));
  const JFraction bell{{R(), Q(3) * R() + Q(1), Q(5) * R() + Q(2)}, {R() * (R() + Q(1)), Q(4) * R() * (R() + Q(1))}};
  const Series s = jfrac_to_series(bell, 4);
  CHECK(s[1] == R());
  CHECK(s[2] == R() * (Q(2) * R() + Q(1)));
  CHECK(s[3] == R() * (Q(6) * R() * R() + Q(6) * R() + Q(1)));
  CHECK(jfrac_to_series({}, 4) == ints({1, 0, 0, 0}));
  CHECK_THROWS_AS(jfrac_to_series({fe({1, 4}), fe({2, 8})}, 8), MathError);
  CHECK(known_precision({fe({1, 4}), fe({2, 8})}) == 5);
}

TEST_CASE("sfrac evaluation examples") {
  CHECK(sfrac_to_series({fe({1, 2, 2, 4, 3, 6, 4, 8})}, 5) == fubini(5));
  CHECK(sfrac_to_series({fe({1, 1, 1, 1, 1, 1})}, 5) == catalan(5));
  CHECK(sfrac_to_series({{R()}}, 4) == Series{Q(1), R(), R() * R(), R() * R() * R()});
}

TEST_CASE("expansion examples") {
  const JFraction j = series_to_jfrac(fubini(7));
  CHECK(std::vector<FieldElem>(j.b.begin(), j.b.begin() + 3) == fe({1, 4, 7}));
  CHECK(std::vector<FieldElem>(j.lam.begin(), j.lam.begin() + 3) == fe({2, 8, 18}));
  const JFraction sh = series_to_jfrac(ints({1, 3, 13, 75, 541, 4683, 47293}));
  CHECK(std::vector<FieldElem>(sh.b.begin(), sh.b.begin() + 3) == fe({3, 6, 9}));
  CHECK(std::vector<FieldElem>(sh.lam.begin(), sh.lam.begin() + 3) == fe({4, 12, 24}));
  CHECK(series_to_sfrac(fubini(9)).s == fe({1, 2, 2, 4, 3, 6, 4, 8}));
  CHECK(series_to_sfrac(catalan(5)).s == fe({1, 1, 1, 1}));
  const SFraction geo = series_to_sfrac(Series{Q(1), R(), R() * R(), R() * R() * R()});
  CHECK(geo.s == std::vector<FieldElem>{R()});
}

TEST_CASE("non-elementary case has a non-integer J coefficient") {
  const JFraction j = series_to_jfrac(ints({1, 2, 12, 112, 1440, 23648, 473088, 11164288, 303648000}));
  auto frac = [](const FieldElem& e) { return e.to_rational().get_den() != 1; };
  bool non_integer = false;
  for (std::size_t k = 0; k < 6 && k < j.b.size(); ++k) non_integer |= frac(j.b[k]);
  for (std::size_t k = 0; k < 6 && k < j.lam.size(); ++k) non_integer |= frac(j.lam[k]);
  CHECK(non_integer);
}

TEST_CASE("degenerate expansion") {
  CHECK_THROWS_AS(series_to_sfrac(ints({1, 0, 1, 0})), MathError);
  CHECK_THROWS_AS(series_to_jfrac(ints({2, 1, 1})), MathError);
}

TEST_CASE("contraction examples") {
  CHECK(contract_s_to_j({fe({1, 2, 2, 4, 3, 6, 4, 8, 5})}) == JFraction{fe({1, 4, 7, 10, 13}), fe({2, 8, 18, 32})});
  const SFraction s{{R(), R() + Q(1), Q(2) * R(), Q(2) * (R() + Q(1)), Q(3) * R(), Q(3) * (R() + Q(1))}};
  const JFraction j = contract_s_to_j(s);
  CHECK(j.b == std::vector<FieldElem>{R(), Q(3) * R() + Q(1), Q(5) * R() + Q(2), Q(3) * (R() + Q(1))});
  CHECK(j.lam == std::vector<FieldElem>{R() * (R() + Q(1)), Q(4) * R() * (R() + Q(1)), Q(9) * R() * (R() + Q(1))});
  CHECK(contract_s_to_j({{R()}}) == JFraction{{R()}, {}});
}

TEST_CASE("property: expansion inverts evaluation") {
  gen::Rng g(301);
  for (int i = 0; i < 60; ++i) {
    const std::size_t depth = 1 + static_cast<std::size_t>(i % 6);
    const JFraction j = gen::jfraction(g, depth, i % 2 == 0);
    JFraction back = series_to_jfrac(jfrac_to_series(j, 2 * depth + 1));
    back.b.resize(depth);
    back.lam.resize(depth);
    CHECK(back == j);

    const SFraction s = gen::sfraction(g, depth, i % 2 == 1);
    CHECK(series_to_sfrac(sfrac_to_series(s, depth + 1)).s == s.s);
  }
}

TEST_CASE("property: contraction preserves the series") {
  gen::Rng g(302);
  for (int i = 0; i < 60; ++i) {
    const SFraction s = gen::sfraction(g, 1 + static_cast<std::size_t>(i % 8), i % 2 == 0);
    const std::size_t n = s.s.size() + 1;
    CHECK(jfrac_to_series(contract_s_to_j(s), n) == sfrac_to_series(s, n));
  }
}

TEST_CASE("printed J/S pairs agree") {
  auto both = [](const JFraction& j, const SFraction& s, std::size_t n) {
    return jfrac_to_series(j, n) == sfrac_to_series(s, n);
  };
  const FieldElem r = R(), one = Q(1);
  // Narayana N1
  CHECK(both({{one, r + one, r + one, r + one}, {r, r, r, r}}, {{one, r, one, r, one, r, one, r}}, 8));
  // E1 and E2
  CHECK(both(t_inverse({one, r + one, r}, 4), {{one, r, Q(2), Q(2) * r, Q(3), Q(3) * r, Q(4), Q(4) * r}}, 8));
  CHECK(both(t_inverse({r, r + one, r}, 4), {{r, one, Q(2) * r, Q(2), Q(3) * r, Q(3), Q(4) * r, Q(4)}}, 8));
  // generalized ordered Bell
  CHECK(both(t_inverse({r, Q(2) * r + one, r * (r + one)}, 4),
             {{r, r + one, Q(2) * r, Q(2) * (r + one), Q(3) * r, Q(3) * (r + one), Q(4) * r, Q(4) * (r + one)}}, 8));
  // Galton
  CHECK(both({{r, Q(5) * r + Q(2), Q(9) * r + Q(4)}, {Q(2) * r * (r + one), Q(12) * r * (r + one), Q(30) * r * (r + one)}},
             {{r, Q(2) * (r + one), Q(3) * r, Q(4) * (r + one), Q(5) * r, Q(6) * (r + one)}}, 6));
  // the (1+2r(1-e^z))^(-1/2) family
  const FieldElem t = Q(2) * r + one;
  CHECK(both({{r, Q(5) * r + one, Q(9) * r + Q(2)}, {r * t, Q(6) * r * t, Q(15) * r * t}},
             {{r, t, Q(3) * r, Q(2) * t, Q(5) * r, Q(3) * t}}, 6));
}

TEST_CASE("Deleham examples") {
  const Triangle a = deleham(fe({0, 1, 0, 2, 0, 3}), fe({1, 1, 2, 2, 3, 3}), 5);
  CHECK(a.rows[4] == fe({0, 1, 14, 36, 24}));
  const Triangle b = deleham(fe({1, 1, 1, 1, 1, 1, 1, 1}), fe({1, 0, 1, 0, 1, 0, 1, 0}), 4);
  CHECK(b.rows[3] == fe({5, 10, 6, 1}));
  const Triangle z = deleham({}, {}, 3);
  CHECK(z.rows[0] == fe({1}));
  CHECK(z.rows[2] == fe({0, 0, 0}));
  const Triangle e3 = deleham_delta1(fe({0, 1, 0, 2, 0}), fe({1, 0, 2, 0, 3}), 5);
  CHECK(e3.rows[4] == fe({1, 26, 66, 26, 1}));
  const Triangle n3 = deleham_delta1(fe({0, 1, 0, 1, 0}), fe({1, 0, 1, 0, 1}), 4);
  CHECK(n3.rows[3] == fe({1, 6, 6, 1}));
}

TEST_CASE("Deleham reversal duality on the table rows") {
  const std::vector<std::pair<std::vector<FieldElem>, std::vector<FieldElem>>> rows = {
      {fe({1, 0, 1, 0, 1, 0, 1, 0}), fe({0, 1, 0, 1, 0, 1, 0, 1})},
      {fe({0, 1, 0, 1, 0, 1, 0, 1}), fe({1, 0, 1, 0, 1, 0, 1, 0})},
      {fe({1, 0, 2, 0, 3, 0, 4, 0}), fe({0, 1, 0, 2, 0, 3, 0, 4})},
      {fe({0, 1, 0, 2, 0, 3, 0, 4}), fe({1, 0, 2, 0, 3, 0, 4, 0})},
  };
  for (const auto& [r, s] : rows) CHECK(deleham(s, r, 7) == reversal(deleham(r, s, 7)));
  gen::Rng g(303);
  for (int i = 0; i < 20; ++i) {
    std::vector<FieldElem> r, s;
    for (int k = 0; k < 10; ++k) {
      r.push_back(gen::rational(g));
      s.push_back(gen::rational(g));
    }
    CHECK(deleham(s, r, 6) == reversal(deleham(r, s, 6)));
  }
}

TEST_CASE("T transform examples") {
  const JFraction e1 = t_inverse({Q(1), R() + Q(1), R()}, 3);
  CHECK(e1.b == std::vector<FieldElem>{Q(1), R() + Q(2), Q(2) * R() + Q(3)});
  CHECK(e1.lam == std::vector<FieldElem>{R(), Q(4) * R(), Q(9) * R()});
  const JFraction a046802 = t_inverse({R() + Q(1), R() + Q(1), R()}, 3);
  CHECK(a046802.b == std::vector<FieldElem>{R() + Q(1), Q(2) * (R() + Q(1)), Q(3) * (R() + Q(1))});
  const JFraction zero = t_inverse({Q(0), Q(0), Q(0)}, 3);
  for (const auto& v : zero.b) CHECK(v.is_zero());
  for (const auto& v : zero.lam) CHECK(v.is_zero());

  const FieldElem rr1 = R() * (R() + Q(1));
  CHECK(t_pattern({{R(), Q(3) * R() + Q(1), Q(5) * R() + Q(2)}, {rr1, Q(4) * rr1, Q(9) * rr1}}) ==
        TPattern{R(), Q(2) * R() + Q(1), rr1});
  const FieldElem m = -(R() + Q(1));
  CHECK(t_pattern({{Q(0), -R(), Q(-2) * R(), Q(-3) * R()}, {m, Q(4) * m, Q(9) * m}}) == TPattern{Q(0), -R(), m});
  // E3: lam = 2r, 6r, 12r is not quadratic in n
  const JFraction e3{{R() + Q(1), Q(2) * (R() + Q(1)), Q(3) * (R() + Q(1))}, {Q(2) * R(), Q(6) * R(), Q(12) * R()}};
  CHECK_THROWS_AS(t_forward(e3), MathError);
}

TEST_CASE("property: T transform round trips") {
  gen::Rng g(304);
  for (int i = 0; i < 50; ++i) {
    const TPattern p{gen::elem(g), gen::elem(g), gen::elem(g)};
    CHECK(t_pattern(t_inverse(p, 5)) == p);
    const JFraction j = t_inverse(p, 4);
    CHECK(t_inverse(t_pattern(j), 4) == j);
    CHECK(t_forward(j) == JFraction{{p.b0, p.c, p.c, p.c}, {p.mu, p.mu, p.mu, p.mu}});
  }
}
