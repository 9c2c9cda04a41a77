#pragma once

#include <cstddef>
#include <vector>

#include "seqpipe/series.hpp"

namespace seqpipe {

struct Triangle;

/// Jacobi-type fraction 1/(1 - b0 x - lam1 x^2/(1 - b1 x - lam2 x^2/(1 - ...))).
///
/// With m = b.size(): when lam.size() < m the fraction terminates (all later
/// lam are zero and the expansion is exact to any precision). When
/// lam.size() >= m it continues past the known levels and determines
/// 2m + 1 coefficients.
struct JFraction {
  std::vector<FieldElem> b;
  std::vector<FieldElem> lam;

  friend bool operator==(const JFraction&, const JFraction&) = default;
};

/// Stieltjes-type fraction 1/(1 - s1 x/(1 - s2 x/(1 - ...))); the tail after
/// the stored coefficients is zero.
struct SFraction {
  std::vector<FieldElem> s;

  friend bool operator==(const SFraction&, const SFraction&) = default;
};

/// Number of coefficients a J-fraction determines; SIZE_MAX when it terminates.
std::size_t known_precision(const JFraction& j);

/// Bottom-up evaluation; InsufficientDepth when prec exceeds known_precision.
Series jfrac_to_series(const JFraction& j, std::size_t prec);
Series sfrac_to_series(const SFraction& s, std::size_t prec);

/// Expansion by repeated reciprocal-and-strip. One fraction entry is
/// recovered per coefficient after the first (b0, lam1, b1, lam2, ...).
/// f(0) must be 1. A vanishing partial numerator ends the expansion when
/// the remainder is zero to the known precision; DegenerateCfrac otherwise.
JFraction series_to_jfrac(const Series& f);
SFraction series_to_sfrac(const Series& f);

/// b0 = s1, b_n = s_{2n} + s_{2n+1}, lam_n = s_{2n-1} s_{2n}.
/// Missing s are zero, so the result always terminates: it has one more b
/// entry than lam entries.
JFraction contract_s_to_j(const SFraction& s);

/// Triangle [r0, r1, ...] Delta [s0, s1, ...]: row n holds the coefficients
/// of y^k in [x^n] of the S-fraction with partial numerators r_k x + s_k x y.
/// Missing entries are zero. Entries must not depend on r.
Triangle deleham(const std::vector<FieldElem>& rs, const std::vector<FieldElem>& ss,
                 std::size_t rows);
/// As deleham, but the first partial numerator joins the top level:
/// 1/(1 - (r0 x + s0 x y) - (r1 x + s1 x y)/(1 - ...)).
Triangle deleham_delta1(const std::vector<FieldElem>& rs, const std::vector<FieldElem>& ss,
                        std::size_t rows);

/// Parameters (b0, c, mu) of a constant-tail fraction J(b0, c, c, ...; mu, mu, ...).
struct TPattern {
  FieldElem b0;
  FieldElem c;
  FieldElem mu;

  friend bool operator==(const TPattern&, const TPattern&) = default;
};

/// Pre-image J(b0 + n c; n^2 mu) of the constant-tail fraction, with `depth`
/// b-entries and `depth` lam-entries.
JFraction t_inverse(const TPattern& p, std::size_t depth);
/// Reads (b0, c, mu) off a fraction of the affine/quadratic pattern, checking
/// every provided entry (PatternMismatch). Needs two b and one lam entries.
TPattern t_pattern(const JFraction& j);
/// The constant-tail image of `j`, with the same number of entries.
JFraction t_forward(const JFraction& j);

}  // namespace seqpipe
