#include "seqpipe/transforms.hpp"

#include "seqpipe/errors.hpp"

namespace seqpipe {

Series inverse_sumudu(const Series& g) {
  std::vector<FieldElem> out(g.prec());
  mpz_class fact = 1;
  for (std::size_t n = 0; n < g.prec(); ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    out[n] = g[n] / FieldElem(fact);
  }
  return Series(std::move(out));
}

Series sumudu(const Series& f) {
  std::vector<FieldElem> out(f.prec());
  mpz_class fact = 1;
  for (std::size_t n = 0; n < f.prec(); ++n) {
    if (n > 0) fact *= static_cast<unsigned long>(n);
    out[n] = f[n] * FieldElem(fact);
  }
  return Series(std::move(out));
}

Series invert_transform(const Series& g, const FieldElem& c) {
  if (c.is_zero()) return g;
  // 1 - c x g
  std::vector<FieldElem> den(g.prec());
  if (!den.empty()) den[0] = FieldElem(1);
  for (std::size_t n = 1; n < g.prec(); ++n) den[n] = -(c * g[n - 1]);
  return div(g, Series(std::move(den)));
}

Series binomial_transform(const Series& g, BinomialDirection direction) {
  const std::size_t n = g.prec();
  const FieldElem s = direction == BinomialDirection::Forward ? FieldElem(1) : FieldElem(-1);
  // 1/(1 - s x) and x/(1 - s x)
  std::vector<FieldElem> geo(n);
  FieldElem p(1);
  for (std::size_t k = 0; k < n; ++k) {
    geo[k] = p;
    p *= s;
  }
  Series prefactor(geo);
  std::vector<FieldElem> shifted(n);
  for (std::size_t k = 1; k < n; ++k) shifted[k] = geo[k - 1];
  return mul(prefactor, compose(g, Series(std::move(shifted))));
}

PipelineTrace pipeline_P_trace(const Series& g) {
  if (g.prec() < 2 || !g[0].is_one() || !g[1].is_zero()) {
    raise(ErrorKind::PipelinePrecondition, "pipeline input must begin 1, 0");
  }
  PipelineTrace t;
  t.g_tilde = inverse_sumudu(g);
  t.h = log_derivative(t.g_tilde);
  t.q = integrate(sub(Series::one(t.h.prec()), t.h));
  t.u = revert(t.q);
  t.F = derivative(t.u);
  return t;
}

Series pipeline_P(const Series& g) { return pipeline_P_trace(g).F; }

Series partial_P(const Series& g) {
  if (g.prec() == 0 || !g[0].is_one()) {
    raise(ErrorKind::NonUnitConstantTerm, "partial pipeline needs constant term 1");
  }
  return log_derivative(inverse_sumudu(g));
}

Series reverse_P(const Series& F) {
  if (F.prec() == 0 || !F[0].is_one()) {
    raise(ErrorKind::PipelinePrecondition, "pipeline result must have constant term 1");
  }
  Series v = revert(integrate(F));
  return exp(sub(Series::x(v.prec()), v));
}

}  // namespace seqpipe
