#include "seqpipe/series.hpp"

#include <algorithm>
#include <utility>

#include "seqpipe/errors.hpp"

namespace seqpipe {

Series Series::constant(const FieldElem& c, std::size_t prec) {
  std::vector<FieldElem> v(prec);
  if (prec > 0) v[0] = c;
  return Series(std::move(v));
}

Series Series::x(std::size_t prec) {
  std::vector<FieldElem> v(prec);
  if (prec > 1) v[1] = FieldElem(1);
  return Series(std::move(v));
}

Series Series::truncated(std::size_t n) const {
  if (n >= c_.size()) return *this;
  return Series(std::vector<FieldElem>(c_.begin(), c_.begin() + static_cast<long>(n)));
}

std::size_t Series::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return i;
  }
  return c_.size();
}

PolyX::PolyX(std::vector<FieldElem> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyX::PolyX(std::initializer_list<FieldElem> coeffs) : c_(coeffs) { trim(); }

void PolyX::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyX operator+(const PolyX& a, const PolyX& b) {
  std::vector<FieldElem> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return PolyX(std::move(out));
}

PolyX operator-(const PolyX& a, const PolyX& b) { return a + (-b); }

PolyX PolyX::operator-() const {
  PolyX out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

PolyX operator*(const PolyX& a, const PolyX& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FieldElem> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyX(std::move(out));
}

PolyX PolyX::shifted_down(std::size_t k) const {
  if (k >= c_.size()) return {};
  return PolyX(std::vector<FieldElem>(c_.begin() + static_cast<long>(k), c_.end()));
}

Series PolyX::to_series(std::size_t prec) const {
  std::vector<FieldElem> v(prec);
  for (std::size_t i = 0; i < prec && i < c_.size(); ++i) v[i] = c_[i];
  return Series(std::move(v));
}

Series from_ratfun(const PolyX& num, const PolyX& den, std::size_t prec) {
  if (den.coeff(0).is_zero()) {
    raise(ErrorKind::NonUnitConstantTerm, "denominator of rational function vanishes at x = 0");
  }
  const FieldElem inv0 = den.coeff(0).inverse();
  std::vector<FieldElem> out(prec);
  const auto& d = den.coeffs();
  for (std::size_t n = 0; n < prec; ++n) {
    FieldElem acc = num.coeff(n);
    for (std::size_t k = 1; k <= n && k < d.size(); ++k) {
      if (!d[k].is_zero()) acc -= d[k] * out[n - k];
    }
    out[n] = acc * inv0;
  }
  return Series(std::move(out));
}

Series add(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.prec(), b.prec());
  std::vector<FieldElem> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
  return Series(std::move(out));
}

Series sub(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.prec(), b.prec());
  std::vector<FieldElem> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
  return Series(std::move(out));
}

Series neg(const Series& a) {
  std::vector<FieldElem> out(a.prec());
  for (std::size_t i = 0; i < a.prec(); ++i) out[i] = -a[i];
  return Series(std::move(out));
}

Series scale(const Series& a, const FieldElem& k) {
  std::vector<FieldElem> out(a.prec());
  for (std::size_t i = 0; i < a.prec(); ++i) out[i] = a[i] * k;
  return Series(std::move(out));
}

Series mul(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.prec(), b.prec());
  std::vector<FieldElem> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return Series(std::move(out));
}

Series div(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.prec(), b.prec());
  if (n == 0) return Series();
  if (b[0].is_zero()) raise(ErrorKind::NonUnitConstantTerm, "divisor has zero constant term");
  const FieldElem inv0 = b[0].inverse();
  std::vector<FieldElem> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    FieldElem acc = a[i];
    for (std::size_t k = 1; k <= i; ++k) {
      if (!b[k].is_zero()) acc -= b[k] * out[i - k];
    }
    out[i] = acc * inv0;
  }
  return Series(std::move(out));
}

Series pow_int(const Series& f, long e) {
  if (e < 0) return div(Series::one(f.prec()), pow_int(f, -e));
  Series base = f;
  Series acc = Series::one(f.prec());
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return acc;
}

Series compose(const Series& g, const Series& f) {
  if (f.prec() > 0 && !f[0].is_zero()) {
    raise(ErrorKind::CompositionNeedsZeroConstant, "inner series has nonzero constant term");
  }
  const std::size_t n = std::min(g.prec(), f.prec());
  if (n == 0) return Series();
  const Series inner = f.truncated(n);
  Series acc = Series::constant(g[n - 1], n);
  for (std::size_t k = n - 1; k-- > 0;) {
    acc = mul(acc, inner);
    std::vector<FieldElem> c = acc.coeffs();
    c[0] += g[k];
    acc = Series(std::move(c));
  }
  return acc;
}

Series revert(const Series& f) {
  if (f.prec() < 2) raise(ErrorKind::NotReversible, "linear coefficient is not known");
  if (!f[0].is_zero()) raise(ErrorKind::NotReversible, "series has nonzero constant term");
  if (f[1].is_zero()) raise(ErrorKind::NotReversible, "linear coefficient is zero");
  const std::size_t n = f.prec();
  // x/f as a series of precision n - 1.
  const Series f_over_x(std::vector<FieldElem>(f.coeffs().begin() + 1, f.coeffs().end()));
  const Series h = div(Series::one(n - 1), f_over_x);
  std::vector<FieldElem> out(n);
  Series hp = Series::one(n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    hp = mul(hp, h);
    out[k] = hp[k - 1] / FieldElem(static_cast<long>(k));
  }
  return Series(std::move(out));
}

Series gf_revert(const Series& g) {
  if (g.prec() == 0) return Series();
  if (g[0].is_zero()) raise(ErrorKind::NotReversible, "constant term is zero");
  std::vector<FieldElem> xg(g.prec() + 1);
  std::copy(g.coeffs().begin(), g.coeffs().end(), xg.begin() + 1);
  Series rev = revert(Series(std::move(xg)));
  return Series(std::vector<FieldElem>(rev.coeffs().begin() + 1, rev.coeffs().end()));
}

Series derivative(const Series& f) {
  if (f.prec() == 0) return Series();
  std::vector<FieldElem> out(f.prec() - 1);
  for (std::size_t n = 0; n + 1 < f.prec(); ++n) {
    out[n] = f[n + 1] * FieldElem(static_cast<long>(n + 1));
  }
  return Series(std::move(out));
}

Series integrate(const Series& f) {
  std::vector<FieldElem> out(f.prec() + 1);
  for (std::size_t n = 0; n < f.prec(); ++n) {
    out[n + 1] = f[n] / FieldElem(static_cast<long>(n + 1));
  }
  return Series(std::move(out));
}

Series log_derivative(const Series& f) {
  if (f.prec() == 0 || f[0].is_zero()) {
    raise(ErrorKind::NonUnitConstantTerm, "logarithmic derivative needs a nonzero constant term");
  }
  return div(derivative(f), f.truncated(f.prec() - 1));
}

Series log(const Series& f) {
  if (f.prec() == 0) return Series();
  if (!f[0].is_one()) raise(ErrorKind::NonUnitConstantTerm, "log needs constant term 1");
  return integrate(log_derivative(f));
}

Series exp(const Series& f) {
  if (f.prec() == 0) return Series();
  if (!f[0].is_zero()) {
    raise(ErrorKind::CompositionNeedsZeroConstant, "exp needs constant term 0");
  }
  const std::size_t n = f.prec();
  std::vector<FieldElem> kf(n);
  for (std::size_t k = 1; k < n; ++k) kf[k] = f[k] * FieldElem(static_cast<long>(k));
  std::vector<FieldElem> e(n);
  e[0] = FieldElem(1);
  for (std::size_t m = 1; m < n; ++m) {
    FieldElem acc;
    for (std::size_t k = 1; k <= m; ++k) {
      if (!kf[k].is_zero()) acc += kf[k] * e[m - k];
    }
    e[m] = acc / FieldElem(static_cast<long>(m));
  }
  return Series(std::move(e));
}

Series pow_rational(const Series& f, const mpq_class& e) {
  if (f.prec() == 0) return Series();
  if (!f[0].is_one()) raise(ErrorKind::NonUnitConstantTerm, "rational power needs constant term 1");
  const std::size_t n = f.prec();
  const FieldElem ef(e);
  std::vector<FieldElem> g(n);
  g[0] = FieldElem(1);
  for (std::size_t m = 1; m < n; ++m) {
    FieldElem acc;
    for (std::size_t k = 1; k <= m; ++k) {
      if (f[k].is_zero()) continue;
      FieldElem w = ef * FieldElem(static_cast<long>(k)) - FieldElem(static_cast<long>(m - k));
      acc += w * f[k] * g[m - k];
    }
    g[m] = acc / FieldElem(static_cast<long>(m));
  }
  return Series(std::move(g));
}

std::string to_string(const Series& s) {
  std::string out;
  for (std::size_t i = 0; i < s.prec(); ++i) {
    if (i) out += ", ";
    out += s[i].to_string();
  }
  return out;
}

}  // namespace seqpipe
