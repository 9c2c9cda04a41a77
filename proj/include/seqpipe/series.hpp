#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "seqpipe/field.hpp"

namespace seqpipe {

/// Truncated power series c_0 + c_1 x + ... + c_{N-1} x^{N-1} + O(x^N) over
/// Q(r). The precision N is the number of stored coefficients; operations
/// return the largest precision they can guarantee and never zero-pad.
///
/// The formal variable is anonymous: whether a series is read as an ordinary
/// or an exponential generating function is up to the operation applied to
/// it (see sumudu / inverse_sumudu).
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<FieldElem> coeffs) : c_(std::move(coeffs)) {}
  Series(std::initializer_list<FieldElem> coeffs) : c_(coeffs) {}

  static Series zero(std::size_t prec) { return Series(std::vector<FieldElem>(prec)); }
  static Series constant(const FieldElem& c, std::size_t prec);
  static Series one(std::size_t prec) { return constant(FieldElem(1), prec); }
  /// The series x, i.e. 0, 1, 0, 0, ...
  static Series x(std::size_t prec);

  std::size_t prec() const noexcept { return c_.size(); }
  const FieldElem& operator[](std::size_t n) const { return c_[n]; }
  const std::vector<FieldElem>& coeffs() const noexcept { return c_; }

  /// First min(prec, n) coefficients.
  Series truncated(std::size_t n) const;
  /// Index of the first nonzero coefficient, or prec() if none is known.
  std::size_t valuation() const;

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

 private:
  std::vector<FieldElem> c_;
};

/// Polynomial in the formal variable with Q(r) coefficients, trailing zeros
/// trimmed. Used as numerator/denominator of rational generating functions.
class PolyX {
 public:
  PolyX() = default;
  explicit PolyX(std::vector<FieldElem> coeffs);
  PolyX(std::initializer_list<FieldElem> coeffs);

  bool is_zero() const noexcept { return c_.empty(); }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  FieldElem coeff(std::size_t k) const { return k < c_.size() ? c_[k] : FieldElem(); }
  const std::vector<FieldElem>& coeffs() const noexcept { return c_; }

  friend PolyX operator+(const PolyX& a, const PolyX& b);
  friend PolyX operator-(const PolyX& a, const PolyX& b);
  friend PolyX operator*(const PolyX& a, const PolyX& b);
  PolyX operator-() const;
  friend bool operator==(const PolyX& a, const PolyX& b) { return a.c_ == b.c_; }

  /// Drops the factor x^k (the k lowest coefficients must be zero).
  PolyX shifted_down(std::size_t k) const;
  /// Coefficients as a series of the given precision (exact).
  Series to_series(std::size_t prec) const;

 private:
  void trim();
  std::vector<FieldElem> c_;
};

/// Power-series expansion of num/den to prec coefficients.
/// Throws NonUnitConstantTerm when den(0) = 0.
Series from_ratfun(const PolyX& num, const PolyX& den, std::size_t prec);

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);
Series scale(const Series& a, const FieldElem& k);
/// Cauchy product truncated to the smaller precision.
Series mul(const Series& a, const Series& b);
/// Quotient a/b; b(0) must be nonzero (NonUnitConstantTerm otherwise).
Series div(const Series& a, const Series& b);
/// Integer power; negative exponents need an invertible constant term.
Series pow_int(const Series& f, long e);

/// g(f(x)); requires f(0) = 0 (CompositionNeedsZeroConstant).
Series compose(const Series& g, const Series& f);

/// Compositional inverse: compose(f, revert(f)) = x. Requires f(0) = 0 and a
/// nonzero linear coefficient (NotReversible). Computed by Lagrange
/// inversion, [x^n] revert(f) = (1/n) [x^(n-1)] (x/f)^n.
Series revert(const Series& f);
/// (1/x) revert(x g) for a series with nonzero constant term.
Series gf_revert(const Series& g);

/// Term-wise derivative; precision drops by one.
Series derivative(const Series& f);
/// Integral with zero constant; precision grows by one.
Series integrate(const Series& f);

/// Logarithm of a series with constant term 1, via L' = f'/f.
Series log(const Series& f);
/// Exponential of a series with zero constant term, via E' = E f'.
Series exp(const Series& f);
/// f^e for rational e and f(0) = 1, solved from f (f^e)' = e f' f^e.
Series pow_rational(const Series& f, const mpq_class& e);
/// f'/f; f(0) must be nonzero.
Series log_derivative(const Series& f);

std::string to_string(const Series& s);

}  // namespace seqpipe
