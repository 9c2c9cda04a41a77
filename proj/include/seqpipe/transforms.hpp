#pragma once

#include "seqpipe/series.hpp"

namespace seqpipe {

/// Intermediate stages of one pipeline run. All series are plain
/// coefficients; g_tilde, h and u are exponential generating functions.
struct PipelineTrace {
  Series g_tilde;  ///< inverse Sumudu transform of the input
  Series h;        ///< logarithmic derivative of g_tilde
  Series q;        ///< integral of 1 - h, zero constant
  Series u;        ///< compositional inverse of q
  Series F;        ///< derivative of u, the result
};

/// c_n -> c_n / n!: reads an ordinary generating function's sequence as the
/// sequence of an exponential generating function.
Series inverse_sumudu(const Series& g);
/// c_n -> c_n * n!.
Series sumudu(const Series& f);

/// g / (1 - c x g). The classical INVERT(m) corresponds to c = -m.
Series invert_transform(const Series& g, const FieldElem& c);

enum class BinomialDirection { Forward, Inverse };

/// Forward: g(x/(1-x))/(1-x). Inverse: g(x/(1+x))/(1+x).
Series binomial_transform(const Series& g, BinomialDirection direction);

/// The transformation pipeline: inverse Sumudu, logarithmic derivative h,
/// integral of 1 - h, reversion, derivative. The input must begin 1, 0
/// (PipelinePrecondition otherwise). A series of precision N yields N - 1
/// coefficients of the result.
Series pipeline_P(const Series& g);
PipelineTrace pipeline_P_trace(const Series& g);

/// The first two pipeline steps only: log_derivative(inverse_sumudu(g)).
Series partial_P(const Series& g);

/// Pre-image of a pipeline result: exp(x - revert(integral of F)), an egf.
/// F(0) must be 1.
Series reverse_P(const Series& F);

}  // namespace seqpipe
