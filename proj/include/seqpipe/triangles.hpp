#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "seqpipe/cfrac.hpp"
#include "seqpipe/series.hpp"

namespace seqpipe {

/// Lower-triangular array stored densely by rows; row n has n + 1 entries.
struct Triangle {
  std::vector<std::vector<FieldElem>> rows;

  std::size_t size() const noexcept { return rows.size(); }
  /// T(n, k), zero above the diagonal.
  FieldElem at(std::size_t n, std::size_t k) const {
    return k <= n && n < rows.size() ? rows[n][k] : FieldElem();
  }
  static Triangle identity(std::size_t n);

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// Dense n x n matrix (production matrices, small fixture matrices).
struct SquareMatrix {
  std::vector<std::vector<FieldElem>> m;

  std::size_t size() const noexcept { return m.size(); }
  static SquareMatrix zero(std::size_t n);
  static SquareMatrix from_triangle(const Triangle& t);

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;
};

enum class RiordanKind { Ordinary, Exponential };

/// (g, f) or [g, f]: column k is g f^k, scaled by n!/k! when exponential.
/// g(0) != 0, f(0) = 0, f'(0) != 0.
struct RiordanArray {
  Series g;
  Series f;
  RiordanKind kind = RiordanKind::Ordinary;
};

/// Three-term recurrence data read off a tridiagonal production matrix:
/// alpha[n] = P(n, n), beta[n] = P(n + 1, n). The polynomials are
/// P_{n+1} = (x - alpha[n]) P_n - beta[n-1] P_{n-1}.
struct RecurrenceCoeffs {
  std::vector<FieldElem> alpha;
  std::vector<FieldElem> beta;

  friend bool operator==(const RecurrenceCoeffs&, const RecurrenceCoeffs&) = default;
};

enum class GfMode { Ogf, Egf };

/// Row n holds the r-coefficients of [x^n] gf (times n! in Egf mode). Every
/// entry must be a polynomial in r of degree at most n (NonPolynomialRow).
/// Produces min(rows, gf.prec()) rows.
Triangle triangle_from_gf(const Series& gf, std::size_t rows, GfMode mode);
/// Bivariate ordinary gf of a triangle: [x^n] = sum_k T(n, k) r^k.
Series triangle_to_gf(const Triangle& t);

Triangle reversal(const Triangle& t);
Triangle matmul(const Triangle& a, const Triangle& b);
/// Exact inverse; all diagonal entries must be nonzero (SingularDiagonal).
Triangle tri_inverse(const Triangle& t);
Triangle binomial_matrix(std::size_t rows);
/// Row sums as a series of precision t.size().
Series row_sums(const Triangle& t);
/// Drops row 0: row n + 1 becomes row n, truncated to n + 1 entries.
Triangle behead(const Triangle& t);

Triangle riordan_to_triangle(const RiordanArray& a, std::size_t rows);
/// g h(f) for an ordinary array.
Series riordan_apply(const RiordanArray& a, const Series& h);

/// Production matrix of an exponential Riordan array from its A- and
/// Z-series, A = f'(fbar), Z = g'(fbar)/g(fbar):
/// P(i, j) = i!/j! (Z_{i-j} + j A_{i-j+1}). Ordinary arrays use the
/// definition M P = M with its first row removed. g and f need size + 1
/// coefficients (PrecisionExhausted).
SquareMatrix production_matrix(const RiordanArray& a, std::size_t size);
/// Requires a tridiagonal matrix with unit superdiagonal (NotTridiagonal).
RecurrenceCoeffs recurrence_from_production(const SquareMatrix& p);
/// Coefficient rows of P_0 .. P_{rows-1}; missing recurrence data is zero.
Triangle orthopoly_triangle(const RecurrenceCoeffs& rc, std::size_t rows);

/// L[p q] with L[x^n] = moments[n]; PrecisionExhausted when
/// deg p + deg q >= moments.prec().
FieldElem moment_functional(const Series& moments, const PolyX& p, const PolyX& q);

SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b);
/// Matrix times the column vector of the series' coefficients.
Series apply(const SquareMatrix& a, const Series& v);

}  // namespace seqpipe
