#include "seqpipe/field.hpp"

#include <utility>

#include "seqpipe/errors.hpp"

namespace seqpipe {

FieldElem::FieldElem(const mpq_class& value)
    : num_(mpz_class(value.get_num())), den_(mpz_class(value.get_den())) {
  if (den_.is_zero()) raise(ErrorKind::DivisionByZero, "zero denominator in Q(r)");
  normalize();
}

FieldElem::FieldElem(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) raise(ErrorKind::DivisionByZero, "zero denominator in Q(r)");
  normalize();
}

FieldElem FieldElem::r() { return FieldElem(Poly::r()); }

void FieldElem::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.is_one()) return;
  Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

mpq_class FieldElem::to_rational() const {
  mpq_class q(num_.coeff(0), den_.coeff(0));
  q.canonicalize();
  return q;
}

mpq_class FieldElem::poly_coeff(std::size_t k) const {
  mpq_class q(num_.coeff(k), den_.coeff(0));
  q.canonicalize();
  return q;
}

FieldElem FieldElem::operator-() const { return FieldElem(Raw{}, -num_, den_); }

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  if (is_zero() || o.is_zero()) return *this = FieldElem();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel so both factors stay reduced and the products are small.
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n = num_.divexact(g1) * o.num_.divexact(g2);
  Poly d = den_.divexact(g2) * o.den_.divexact(g1);
  if (d.lead() < 0) {
    n = -n;
    d = -d;
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero in Q(r)");
  Poly n = den_;
  Poly d = num_;
  if (d.lead() < 0) {
    n = -n;
    d = -d;
  }
  return FieldElem(Raw{}, std::move(n), std::move(d));
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inverse(); }

FieldElem FieldElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem base = *this;
  FieldElem acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return acc;
}

namespace {

FieldElem horner(const Poly& p, const FieldElem& at) {
  FieldElem acc;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= at;
    acc += FieldElem(c[i]);
  }
  return acc;
}

}  // namespace

FieldElem FieldElem::substitute(const FieldElem& value) const {
  FieldElem d = horner(den_, value);
  if (d.is_zero()) {
    raise(ErrorKind::EvaluationPole,
          "denominator " + den_.to_string() + " vanishes at r = " + value.to_string());
  }
  return horner(num_, value) / d;
}

mpq_class FieldElem::evaluate(const mpq_class& at) const {
  mpq_class d = den_.evaluate(at);
  if (d == 0) {
    raise(ErrorKind::EvaluationPole,
          "denominator " + den_.to_string() + " vanishes at r = " + at.get_str());
  }
  mpq_class v = num_.evaluate(at) / d;
  v.canonicalize();
  return v;
}

std::string FieldElem::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const Poly& p) {
    std::string s = p.to_string();
    if (p.is_constant()) return s;
    bool simple = p.coeffs().size() == 1 || (p.degree() >= 1 && [&] {
                    std::size_t nz = 0;
                    for (const auto& c : p.coeffs()) nz += c != 0;
                    return nz == 1;
                  }());
    if (simple && s[0] != '-' && s.find('*') == std::string::npos) return s;
    return "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace seqpipe
