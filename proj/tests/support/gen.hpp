#pragma once

// Hand-rolled generators for the property tests. Every generator takes the
// caller's engine so a failing case can be replayed from its seed.

#include <cstddef>
#include <random>
#include <vector>

#include "seqpipe/cfrac.hpp"
#include "seqpipe/field.hpp"
#include "seqpipe/series.hpp"

#include "qseries.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline long small_int(Rng& g, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(g);
}

inline seqpipe::Poly poly(Rng& g, long max_deg = 2, long bound = 4) {
  const long d = small_int(g, 0, max_deg);
  std::vector<mpz_class> c;
  for (long i = 0; i <= d; ++i) c.emplace_back(small_int(g, -bound, bound));
  return seqpipe::Poly(std::move(c));
}

inline seqpipe::Poly nonzero_poly(Rng& g, long max_deg = 2, long bound = 4) {
  for (;;) {
    auto p = poly(g, max_deg, bound);
    if (!p.is_zero()) return p;
  }
}

inline seqpipe::FieldElem elem(Rng& g) {
  return seqpipe::FieldElem(poly(g), nonzero_poly(g, 1, 3));
}

inline seqpipe::FieldElem nonzero_elem(Rng& g) {
  return seqpipe::FieldElem(nonzero_poly(g), nonzero_poly(g, 1, 3));
}

// Small rational constants keep the cost of deep compositions bounded.
inline seqpipe::FieldElem rational(Rng& g, long bound = 3) {
  return seqpipe::FieldElem(mpq_class(small_int(g, -bound, bound), small_int(g, 1, 3)));
}

inline seqpipe::FieldElem nonzero_rational(Rng& g, long bound = 3) {
  for (;;) {
    auto e = rational(g, bound);
    if (!e.is_zero()) return e;
  }
}

// Integer polynomial in r of degree <= 1, nonzero.
inline seqpipe::FieldElem linear_in_r(Rng& g) {
  return seqpipe::FieldElem(nonzero_poly(g, 1, 3));
}

inline seqpipe::Series series(Rng& g, std::size_t prec, bool with_r = false) {
  std::vector<seqpipe::FieldElem> c;
  for (std::size_t i = 0; i < prec; ++i) c.push_back(with_r ? seqpipe::FieldElem(poly(g, 1, 3)) : rational(g));
  return seqpipe::Series(std::move(c));
}

inline seqpipe::Series unit_series(Rng& g, std::size_t prec, bool with_r = false) {
  auto s = series(g, prec, with_r);
  auto c = s.coeffs();
  c[0] = seqpipe::FieldElem(1);
  return seqpipe::Series(std::move(c));
}

inline seqpipe::Series revertible(Rng& g, std::size_t prec, bool with_r = false) {
  auto c = series(g, prec, with_r).coeffs();
  c[0] = seqpipe::FieldElem();
  c[1] = nonzero_rational(g);
  return seqpipe::Series(std::move(c));
}

inline seqpipe::JFraction jfraction(Rng& g, std::size_t depth, bool with_r = false) {
  seqpipe::JFraction j;
  for (std::size_t i = 0; i < depth; ++i) {
    j.b.push_back(with_r ? seqpipe::FieldElem(poly(g, 1, 3)) : rational(g));
    j.lam.push_back(with_r ? linear_in_r(g) : nonzero_rational(g));
  }
  return j;
}

inline seqpipe::SFraction sfraction(Rng& g, std::size_t depth, bool with_r = false) {
  seqpipe::SFraction s;
  for (std::size_t i = 0; i < depth; ++i) s.s.push_back(with_r ? linear_in_r(g) : nonzero_rational(g));
  return s;
}

}  // namespace gen

namespace qs {

// Library series evaluated at a numeric r, for comparison with the oracle.
inline QS at(const seqpipe::Series& s, const Q& r) {
  QS out;
  for (const auto& c : s.coeffs()) out.push_back(c.evaluate(r));
  return out;
}

inline QS prefix(const QS& s, std::size_t n) { return QS(s.begin(), s.begin() + std::min(n, s.size())); }

}  // namespace qs
