#include "seqpipe/triangles.hpp"

#include <algorithm>
#include <string>

#include "seqpipe/errors.hpp"
#include "seqpipe/transforms.hpp"

namespace seqpipe {

Triangle Triangle::identity(std::size_t n) {
  Triangle t;
  for (std::size_t i = 0; i < n; ++i) {
    t.rows.emplace_back(i + 1);
    t.rows[i][i] = FieldElem(1);
  }
  return t;
}

SquareMatrix SquareMatrix::zero(std::size_t n) {
  SquareMatrix s;
  s.m.assign(n, std::vector<FieldElem>(n));
  return s;
}

SquareMatrix SquareMatrix::from_triangle(const Triangle& t) {
  SquareMatrix s = zero(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) s.m[i][j] = t.rows[i][j];
  }
  return s;
}

Triangle triangle_from_gf(const Series& gf, std::size_t rows, GfMode mode) {
  const std::size_t n_rows = std::min(rows, gf.prec());
  const Series src = mode == GfMode::Egf ? sumudu(gf.truncated(n_rows)) : gf;
  Triangle t;
  for (std::size_t n = 0; n < n_rows; ++n) {
    const FieldElem& c = src[n];
    if (!c.is_polynomial() || c.poly_degree() > static_cast<long>(n)) {
      raise(ErrorKind::NonPolynomialRow,
            "row " + std::to_string(n) + " entry " + c.to_string() +
                " is not a polynomial in r of degree at most " + std::to_string(n));
    }
    std::vector<FieldElem> row(n + 1);
    for (std::size_t k = 0; k <= n; ++k) row[k] = FieldElem(c.poly_coeff(k));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Series triangle_to_gf(const Triangle& t) {
  std::vector<FieldElem> out(t.size());
  for (std::size_t n = 0; n < t.size(); ++n) {
    FieldElem acc;
    FieldElem rk(1);
    for (std::size_t k = 0; k <= n; ++k) {
      acc += t.rows[n][k] * rk;
      rk *= FieldElem::r();
    }
    out[n] = acc;
  }
  return Series(std::move(out));
}

Triangle reversal(const Triangle& t) {
  Triangle out = t;
  for (auto& row : out.rows) std::reverse(row.begin(), row.end());
  return out;
}

Triangle matmul(const Triangle& a, const Triangle& b) {
  const std::size_t n = std::min(a.size(), b.size());
  Triangle out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FieldElem> row(i + 1);
    for (std::size_t j = 0; j <= i; ++j) {
      FieldElem acc;
      for (std::size_t k = j; k <= i; ++k) {
        if (!a.rows[i][k].is_zero() && !b.rows[k][j].is_zero()) acc += a.rows[i][k] * b.rows[k][j];
      }
      row[j] = acc;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

Triangle tri_inverse(const Triangle& t) {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (t.rows[i][i].is_zero()) {
      raise(ErrorKind::SingularDiagonal, "diagonal entry " + std::to_string(i) + " is zero");
    }
  }
  // Forward substitution row by row: sum_k T(i,k) U(k,j) = delta_ij.
  Triangle u;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FieldElem> row(i + 1);
    const FieldElem inv = t.rows[i][i].inverse();
    row[i] = inv;
    for (std::size_t j = i; j-- > 0;) {
      FieldElem acc;
      for (std::size_t k = j; k < i; ++k) {
        if (!t.rows[i][k].is_zero()) acc += t.rows[i][k] * u.rows[k][j];
      }
      row[j] = -(acc * inv);
    }
    u.rows.push_back(std::move(row));
  }
  return u;
}

Triangle binomial_matrix(std::size_t rows) {
  Triangle t;
  for (std::size_t n = 0; n < rows; ++n) {
    std::vector<FieldElem> row(n + 1);
    mpz_class c = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      row[k] = FieldElem(c);
      c = c * static_cast<unsigned long>(n - k) / static_cast<unsigned long>(k + 1);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Series row_sums(const Triangle& t) {
  std::vector<FieldElem> out(t.size());
  for (std::size_t n = 0; n < t.size(); ++n) {
    for (const auto& v : t.rows[n]) out[n] += v;
  }
  return Series(std::move(out));
}

Triangle behead(const Triangle& t) {
  Triangle out;
  for (std::size_t n = 1; n < t.size(); ++n) {
    out.rows.emplace_back(t.rows[n].begin(), t.rows[n].begin() + static_cast<long>(n));
  }
  return out;
}

namespace {

void check_riordan(const RiordanArray& a) {
  if (a.g.prec() == 0 || a.g[0].is_zero()) {
    raise(ErrorKind::NonUnitConstantTerm, "Riordan g must have a nonzero constant term");
  }
  if (a.f.prec() > 0 && !a.f[0].is_zero()) {
    raise(ErrorKind::CompositionNeedsZeroConstant, "Riordan f must vanish at 0");
  }
  if (a.f.prec() < 2 || a.f[1].is_zero()) {
    raise(ErrorKind::NotReversible, "Riordan f must have a nonzero linear term");
  }
}

}  // namespace

Triangle riordan_to_triangle(const RiordanArray& a, std::size_t rows) {
  check_riordan(a);
  const std::size_t n = std::min({rows, a.g.prec(), a.f.prec()});
  Triangle t;
  t.rows.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.rows[i].resize(i + 1);
  Series col = a.g.truncated(n);
  const Series f = a.f.truncated(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = k; i < n; ++i) t.rows[i][k] = col[i];
    col = mul(col, f);
  }
  if (a.kind == RiordanKind::Exponential) {
    // (i!/k!) [x^i] g f^k
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class ratio = 1;
      for (std::size_t k = i + 1; k-- > 0;) {
        t.rows[i][k] *= FieldElem(ratio);
        ratio *= static_cast<unsigned long>(k);
      }
    }
  }
  return t;
}

Series riordan_apply(const RiordanArray& a, const Series& h) {
  return mul(a.g, compose(h, a.f));
}

SquareMatrix production_matrix(const RiordanArray& a, std::size_t size) {
  check_riordan(a);
  const std::size_t need = size + 1;
  if (a.g.prec() < need || a.f.prec() < need) {
    raise(ErrorKind::PrecisionExhausted, "production matrix of size " + std::to_string(size) +
                                             " needs g and f to " + std::to_string(need) +
                                             " coefficients");
  }
  SquareMatrix p = SquareMatrix::zero(size);
  if (a.kind == RiordanKind::Ordinary) {
    // Straight from the definition: P = M^-1 * (M without its first row).
    const Triangle m = riordan_to_triangle(a, need);
    const Triangle mi = tri_inverse(m);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j <= std::min(i + 1, size - 1); ++j) {
        FieldElem acc;
        for (std::size_t k = j; k <= i; ++k) acc += mi.rows[i][k] * m.at(k + 1, j);
        p.m[i][j] = acc;
      }
    }
    return p;
  }
  const Series g = a.g.truncated(need);
  const Series f = a.f.truncated(need);
  const Series fbar = revert(f);
  const Series A = compose(derivative(f), fbar.truncated(size));
  const Series Z = compose(log_derivative(g), fbar.truncated(size));
  for (std::size_t i = 0; i < size; ++i) {
    mpz_class ratio = 1;  // i!/j!
    for (std::size_t j = i + 1; j-- > 0;) {
      FieldElem v = Z[i - j];
      if (j > 0) v += FieldElem(static_cast<long>(j)) * A[i - j + 1];
      p.m[i][j] = v * FieldElem(ratio);
      ratio *= static_cast<unsigned long>(j);
    }
    if (i + 1 < size) p.m[i][i + 1] = A[0];
  }
  return p;
}

RecurrenceCoeffs recurrence_from_production(const SquareMatrix& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool band = j + 1 >= i && j <= i + 1;
      if (!band && !p.m[i][j].is_zero()) {
        raise(ErrorKind::NotTridiagonal, "entry (" + std::to_string(i) + ", " +
                                             std::to_string(j) + ") is off the three diagonals");
      }
      if (j == i + 1 && !p.m[i][j].is_one()) {
        raise(ErrorKind::NotTridiagonal,
              "superdiagonal entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is not 1");
      }
    }
  }
  RecurrenceCoeffs rc;
  for (std::size_t i = 0; i < n; ++i) rc.alpha.push_back(p.m[i][i]);
  for (std::size_t i = 0; i + 1 < n; ++i) rc.beta.push_back(p.m[i + 1][i]);
  return rc;
}

Triangle orthopoly_triangle(const RecurrenceCoeffs& rc, std::size_t rows) {
  auto alpha = [&](std::size_t i) { return i < rc.alpha.size() ? rc.alpha[i] : FieldElem(); };
  auto beta = [&](std::size_t i) { return i < rc.beta.size() ? rc.beta[i] : FieldElem(); };
  Triangle t;
  if (rows == 0) return t;
  t.rows.push_back({FieldElem(1)});
  for (std::size_t n = 1; n < rows; ++n) {
    // P_n = (x - alpha[n-1]) P_{n-1} - beta[n-2] P_{n-2}
    const auto& p1 = t.rows[n - 1];
    std::vector<FieldElem> row(n + 1);
    for (std::size_t k = 0; k < p1.size(); ++k) {
      row[k + 1] += p1[k];
      row[k] -= alpha(n - 1) * p1[k];
    }
    if (n >= 2) {
      const auto& p2 = t.rows[n - 2];
      const FieldElem b = beta(n - 2);
      for (std::size_t k = 0; k < p2.size(); ++k) row[k] -= b * p2[k];
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

FieldElem moment_functional(const Series& moments, const PolyX& p, const PolyX& q) {
  const PolyX pq = p * q;
  if (pq.is_zero()) return FieldElem();
  if (pq.degree() >= static_cast<long>(moments.prec())) {
    raise(ErrorKind::PrecisionExhausted, "functional needs moment " +
                                             std::to_string(pq.degree()) + " but only " +
                                             std::to_string(moments.prec()) + " are known");
  }
  FieldElem acc;
  for (std::size_t i = 0; i < pq.coeffs().size(); ++i) acc += pq.coeffs()[i] * moments[i];
  return acc;
}

SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b) {
  const std::size_t n = std::min(a.size(), b.size());
  SquareMatrix out = SquareMatrix::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a.m[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b.m[k][j].is_zero()) out.m[i][j] += a.m[i][k] * b.m[k][j];
      }
    }
  }
  return out;
}

Series apply(const SquareMatrix& a, const Series& v) {
  const std::size_t n = std::min(a.size(), v.prec());
  std::vector<FieldElem> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!a.m[i][k].is_zero()) out[i] += a.m[i][k] * v[k];
    }
  }
  return Series(std::move(out));
}

}  // namespace seqpipe
