#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seqpipe {

enum class ErrorKind {
  NonUnitConstantTerm,
  CompositionNeedsZeroConstant,
  NotReversible,
  DivisionByZero,
  PipelinePrecondition,
  InsufficientDepth,
  DegenerateCfrac,
  PatternMismatch,
  NonPolynomialRow,
  SingularDiagonal,
  NotTridiagonal,
  PrecisionExhausted,
  UnknownOracle,
  IndexRange,
  EvaluationPole,
  ArityError,
  TypeErrorValue,
};

std::string_view to_string(ErrorKind kind);

/// Half-open byte range into DSL source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Every failure raised by the math modules and the evaluator.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<Span>& span() const noexcept { return span_; }

  /// Attaches the source span of the innermost expression that failed;
  /// an already attached span is kept.
  void attach_span(Span s) {
    if (!span_) span_ = s;
  }

  /// True for errors caused by a malformed expression rather than by the math
  /// (wrong arity, wrong argument kind). The CLI maps these to usage errors.
  bool is_usage_error() const noexcept {
    return kind_ == ErrorKind::ArityError || kind_ == ErrorKind::TypeErrorValue;
  }

 private:
  ErrorKind kind_;
  std::optional<Span> span_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace seqpipe
