#pragma once

#include <gmpxx.h>

#include <string>

#include "seqpipe/poly.hpp"

namespace seqpipe {

/// Exact element of Q(r), held as num/den over Z[r] in canonical form:
/// gcd(num, den) = 1, the leading coefficient of den is positive, and the
/// integer content shared by num and den is 1. Zero is 0/1. Equal values
/// have identical representations, so == is structural.
class FieldElem {
 public:
  FieldElem() : num_(), den_(1) {}
  FieldElem(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  FieldElem(const mpz_class& value) : num_(value), den_(1) {}  // NOLINT
  FieldElem(const mpq_class& value);  // NOLINT(google-explicit-constructor)
  FieldElem(Poly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  /// Normalizes num/den; throws DivisionByZero when den is zero.
  FieldElem(Poly num, Poly den);

  /// The parameter r itself.
  static FieldElem r();

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  /// True when the value is a polynomial with integer coefficients.
  bool is_integral_polynomial() const noexcept { return den_.is_one(); }
  /// True when the value does not depend on r.
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  /// The value as a rational number; requires is_constant().
  mpq_class to_rational() const;
  /// True when den is a nonzero integer, i.e. the value is in Q[r].
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  /// Coefficient of r^k of a value in Q[r]; requires is_polynomial().
  mpq_class poly_coeff(std::size_t k) const;
  /// Degree in r of a value in Q[r]; -1 for zero.
  long poly_degree() const noexcept { return num_.degree(); }

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  FieldElem inverse() const;
  FieldElem pow(long e) const;

  /// Replaces r by `value`; throws EvaluationPole when the denominator
  /// vanishes there.
  FieldElem substitute(const FieldElem& value) const;
  /// Value at a rational r; throws EvaluationPole at a pole.
  mpq_class evaluate(const mpq_class& at) const;

  /// "num" or "(num)/(den)" in descending powers of r.
  std::string to_string() const;

 private:
  struct Raw {};
  FieldElem(Raw, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Poly num_;
  Poly den_;
};

}  // namespace seqpipe
