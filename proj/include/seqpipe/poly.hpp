#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace seqpipe {

/// Polynomial in the parameter r with arbitrary-size integer coefficients.
/// Coefficients are stored in ascending powers of r with trailing zeros
/// trimmed, so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(long value);  // NOLINT(google-explicit-constructor)
  Poly(const mpz_class& value);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<mpz_class> coeffs);
  Poly(std::initializer_list<long> coeffs);

  /// The monomial r.
  static Poly r();

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  /// Degree of the polynomial; -1 for zero.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }

  /// Coefficient of r^k; zero beyond the degree.
  mpz_class coeff(std::size_t k) const { return k < c_.size() ? c_[k] : mpz_class(0); }
  const mpz_class& lead() const { return c_.back(); }
  const std::vector<mpz_class>& coeffs() const noexcept { return c_; }

  /// gcd of all coefficients (non-negative); zero for the zero polynomial.
  mpz_class content() const;
  Poly primitive_part() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const mpz_class& k);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const mpz_class& k) { return a *= k; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Exact quotient; the caller guarantees that d divides *this over Z[r].
  Poly divexact(const Poly& d) const;
  /// Divides every coefficient by k exactly.
  Poly divexact(const mpz_class& k) const;

  /// Pseudo-remainder: lc(d)^(deg a - deg d + 1) * a mod d.
  Poly prem(const Poly& d) const;

  /// Value at a rational point.
  mpq_class evaluate(const mpq_class& at) const;

  /// Human-readable form in descending powers, e.g. "r^2 + 4*r - 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// Greatest common divisor in Z[r], normalized to a positive leading
/// coefficient. gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace seqpipe
