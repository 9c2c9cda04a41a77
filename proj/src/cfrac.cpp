#include "seqpipe/cfrac.hpp"

#include <limits>
#include <string>

#include "seqpipe/errors.hpp"
#include "seqpipe/triangles.hpp"

namespace seqpipe {

namespace {

FieldElem at(const std::vector<FieldElem>& v, std::size_t i) {
  return i < v.size() ? v[i] : FieldElem();
}

/// Levels 0..last of a fraction whose tail below `last` is 1/(1 - b_last x).
Series evaluate_levels(const std::vector<FieldElem>& b, const std::vector<FieldElem>& lam,
                       std::size_t last, std::size_t prec) {
  // Level k only affects coefficients from x^(2k) on.
  if (prec == 0) return Series();
  const std::size_t useful = (prec + 1) / 2;
  if (last > useful) last = useful;
  Series tail = Series::one(prec);
  for (std::size_t k = last + 1; k-- > 0;) {
    std::vector<FieldElem> den(prec);
    den[0] = FieldElem(1);
    if (prec > 1) den[1] = -at(b, k);
    const FieldElem l = k < last ? at(lam, k) : FieldElem();  // lam_{k+1}
    if (!l.is_zero()) {
      for (std::size_t n = 2; n < prec; ++n) den[n] -= l * tail[n - 2];
    }
    tail = div(Series::one(prec), Series(std::move(den)));
  }
  return tail;
}

}  // namespace

std::size_t known_precision(const JFraction& j) {
  const std::size_t m = j.b.size();
  if (m == 0) return std::numeric_limits<std::size_t>::max();  // the fraction 1
  std::size_t first_zero = j.lam.size() + 1;
  for (std::size_t k = 0; k < j.lam.size(); ++k) {
    if (j.lam[k].is_zero()) {
      first_zero = k + 1;
      break;
    }
  }
  if (first_zero <= m) return std::numeric_limits<std::size_t>::max();
  if (j.lam.size() < m) return std::numeric_limits<std::size_t>::max();
  return 2 * m + 1;
}

Series jfrac_to_series(const JFraction& j, std::size_t prec) {
  const std::size_t known = known_precision(j);
  if (prec > known) {
    raise(ErrorKind::InsufficientDepth, "fraction with " + std::to_string(j.b.size()) +
                                            " levels determines only " + std::to_string(known) +
                                            " coefficients, " + std::to_string(prec) +
                                            " requested");
  }
  // A zero lam_k among the known levels ends the fraction at level k - 1;
  // otherwise the unknown tail below level m is 1 + O(x).
  const std::size_t m = j.b.size();
  std::size_t last = m;
  for (std::size_t k = 0; k < j.lam.size() && k < m; ++k) {
    if (j.lam[k].is_zero()) {
      last = k;
      break;
    }
  }
  if (j.lam.size() < m && last == m) last = j.lam.size();
  return evaluate_levels(j.b, j.lam, last, prec);
}

Series sfrac_to_series(const SFraction& s, std::size_t prec) {
  if (prec == 0) return Series();
  const std::size_t depth = std::min(s.s.size(), prec);
  Series tail = Series::one(prec);
  for (std::size_t k = depth; k-- > 0;) {
    std::vector<FieldElem> den(prec);
    den[0] = FieldElem(1);
    if (!s.s[k].is_zero()) {
      for (std::size_t n = 1; n < prec; ++n) den[n] = -(s.s[k] * tail[n - 1]);
    }
    tail = div(Series::one(prec), Series(std::move(den)));
  }
  return tail;
}

namespace {

void require_unit(const Series& f) {
  if (f.prec() == 0 || !f[0].is_one()) {
    raise(ErrorKind::NonUnitConstantTerm, "continued fraction expansion needs constant term 1");
  }
}

bool all_zero_from(const Series& w, std::size_t from) {
  for (std::size_t i = from; i < w.prec(); ++i) {
    if (!w[i].is_zero()) return false;
  }
  return true;
}

Series drop_front(const Series& w, std::size_t k, const FieldElem& divisor) {
  std::vector<FieldElem> out;
  for (std::size_t i = k; i < w.prec(); ++i) out.push_back(w[i] / divisor);
  return Series(std::move(out));
}

}  // namespace

JFraction series_to_jfrac(const Series& f) {
  require_unit(f);
  JFraction out;
  Series u = f;
  while (u.prec() >= 2) {
    const Series v = div(Series::one(u.prec()), u);  // 1 - b x - lam x^2 T
    const FieldElem b = -v[1];
    out.b.push_back(b);
    if (u.prec() < 3) break;
    Series w = neg(v);
    {
      std::vector<FieldElem> c = w.coeffs();
      c[0] += FieldElem(1);
      c[1] -= b;
      w = Series(std::move(c));
    }
    const FieldElem lam = w[2];
    if (lam.is_zero()) {
      if (all_zero_from(w, 3)) break;
      raise(ErrorKind::DegenerateCfrac, "partial numerator lam_" +
                                            std::to_string(out.lam.size() + 1) +
                                            " vanishes before the series is exhausted");
    }
    out.lam.push_back(lam);
    u = drop_front(w, 2, lam);
  }
  return out;
}

SFraction series_to_sfrac(const Series& f) {
  require_unit(f);
  SFraction out;
  Series u = f;
  while (u.prec() >= 2) {
    const Series v = div(Series::one(u.prec()), u);  // 1 - s x T
    Series w = neg(v);
    {
      std::vector<FieldElem> c = w.coeffs();
      c[0] += FieldElem(1);
      w = Series(std::move(c));
    }
    const FieldElem s = w[1];
    if (s.is_zero()) {
      if (all_zero_from(w, 2)) break;
      raise(ErrorKind::DegenerateCfrac, "partial numerator s_" +
                                            std::to_string(out.s.size() + 1) +
                                            " vanishes before the series is exhausted");
    }
    out.s.push_back(s);
    u = drop_front(w, 1, s);
  }
  return out;
}

JFraction contract_s_to_j(const SFraction& s) {
  JFraction out;
  const auto& v = s.s;
  if (v.empty()) return out;
  // 1-based s_k lives at v[k-1]
  auto sk = [&](std::size_t k) { return at(v, k - 1); };
  out.b.push_back(sk(1));
  for (std::size_t n = 1;; ++n) {
    if (2 * n - 1 > v.size()) break;
    const FieldElem lam = sk(2 * n - 1) * sk(2 * n);
    if (lam.is_zero()) break;
    out.lam.push_back(lam);
    out.b.push_back(sk(2 * n) + sk(2 * n + 1));
  }
  return out;
}

namespace {

std::vector<FieldElem> partial_numerators(const std::vector<FieldElem>& rs,
                                          const std::vector<FieldElem>& ss, std::size_t count) {
  std::vector<FieldElem> a(count);
  const FieldElem y = FieldElem::r();
  for (std::size_t k = 0; k < count; ++k) a[k] = at(rs, k) + at(ss, k) * y;
  return a;
}

}  // namespace

Triangle deleham(const std::vector<FieldElem>& rs, const std::vector<FieldElem>& ss,
                 std::size_t rows) {
  const Series gf = sfrac_to_series(SFraction{partial_numerators(rs, ss, rows)}, rows);
  return triangle_from_gf(gf, rows, GfMode::Ogf);
}

Triangle deleham_delta1(const std::vector<FieldElem>& rs, const std::vector<FieldElem>& ss,
                        std::size_t rows) {
  const std::vector<FieldElem> a = partial_numerators(rs, ss, rows + 1);
  if (rows == 0) return Triangle{};
  const Series tail =
      sfrac_to_series(SFraction{std::vector<FieldElem>(a.begin() + 2, a.end())}, rows);
  std::vector<FieldElem> den(rows);
  den[0] = FieldElem(1);
  if (rows > 1) den[1] = -a[0];
  for (std::size_t n = 1; n < rows; ++n) den[n] -= a[1] * tail[n - 1];
  const Series gf = div(Series::one(rows), Series(std::move(den)));
  return triangle_from_gf(gf, rows, GfMode::Ogf);
}

JFraction t_inverse(const TPattern& p, std::size_t depth) {
  JFraction out;
  for (std::size_t n = 0; n < depth; ++n) {
    out.b.push_back(p.b0 + FieldElem(static_cast<long>(n)) * p.c);
    const long k = static_cast<long>(n + 1);
    out.lam.push_back(FieldElem(k * k) * p.mu);
  }
  return out;
}

TPattern t_pattern(const JFraction& j) {
  if (j.b.size() < 2 || j.lam.empty()) {
    raise(ErrorKind::PatternMismatch, "need at least two b entries and one lam entry");
  }
  TPattern p{j.b[0], j.b[1] - j.b[0], j.lam[0]};
  for (std::size_t n = 2; n < j.b.size(); ++n) {
    if (!(j.b[n] == p.b0 + FieldElem(static_cast<long>(n)) * p.c)) {
      raise(ErrorKind::PatternMismatch, "b_" + std::to_string(n) + " = " + j.b[n].to_string() +
                                            " is not affine in n");
    }
  }
  for (std::size_t k = 1; k < j.lam.size(); ++k) {
    const long n = static_cast<long>(k + 1);
    if (!(j.lam[k] == FieldElem(n * n) * p.mu)) {
      raise(ErrorKind::PatternMismatch, "lam_" + std::to_string(n) + " = " +
                                            j.lam[k].to_string() + " is not " +
                                            std::to_string(n * n) + " * lam_1");
    }
  }
  return p;
}

JFraction t_forward(const JFraction& j) {
  const TPattern p = t_pattern(j);
  JFraction out;
  out.b.assign(j.b.size(), p.c);
  out.b[0] = p.b0;
  out.lam.assign(j.lam.size(), p.mu);
  return out;
}

}  // namespace seqpipe
