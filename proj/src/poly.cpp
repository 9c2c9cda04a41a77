#include "seqpipe/poly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace seqpipe {

Poly::Poly(long value) {
  if (value != 0) c_.emplace_back(value);
}

Poly::Poly(const mpz_class& value) {
  if (value != 0) c_.push_back(value);
}

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

Poly Poly::r() { return Poly{0, 1}; }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (lead() < 0) g = -g;
  return divexact(g);
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const mpz_class& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= k;
  return *this;
}

Poly Poly::divexact(const mpz_class& k) const {
  Poly out = *this;
  for (auto& v : out.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
  return out;
}

Poly Poly::divexact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return {};
  if (d.is_constant()) return divexact(d.c_[0]);
  assert(degree() >= d.degree());
  std::vector<mpz_class> rem = c_;
  std::vector<mpz_class> q(c_.size() - d.c_.size() + 1);
  const std::size_t dd = d.c_.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class& top = rem[k + dd];
    if (top == 0) continue;
    assert(mpz_divisible_p(top.get_mpz_t(), d.lead().get_mpz_t()));
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), d.lead().get_mpz_t());
    for (std::size_t j = 0; j <= dd; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), d.c_[j].get_mpz_t());
    }
  }
  return Poly(std::move(q));
}

Poly Poly::prem(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  Poly a = *this;
  if (a.degree() < d.degree()) return a;
  const mpz_class& lc = d.lead();
  const long dd = d.degree();
  long steps = a.degree() - dd + 1;
  while (!a.is_zero() && a.degree() >= dd) {
    const mpz_class top = a.lead();
    const long shift = a.degree() - dd;
    a *= lc;
    for (long j = 0; j <= dd; ++j) {
      mpz_submul(a.c_[static_cast<std::size_t>(shift + j)].get_mpz_t(), top.get_mpz_t(),
                 d.c_[static_cast<std::size_t>(j)].get_mpz_t());
    }
    a.trim();
    --steps;
  }
  if (steps > 0) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(steps));
    a *= scale;
  }
  return a;
}

mpq_class Poly::evaluate(const mpq_class& at) const {
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= at;
    acc += c_[i];
  }
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const mpz_class& v = c_[i];
    if (v == 0) continue;
    mpz_class mag = abs(v);
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "r";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  mpz_class ca = a.content();
  mpz_class cb = b.content();
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return Poly(cg);

  Poly p = a.primitive_part();
  Poly q = b.primitive_part();
  if (p.degree() < q.degree()) std::swap(p, q);
  while (!q.is_zero()) {
    Poly rem = p.prem(q);
    p = std::move(q);
    if (rem.is_zero()) break;
    q = rem.primitive_part();
    if (q.is_constant()) return Poly(cg);
  }
  return p.primitive_part() * cg;
}

}  // namespace seqpipe
