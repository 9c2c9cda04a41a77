#include "seqpipe/errors.hpp"

namespace seqpipe {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::CompositionNeedsZeroConstant: return "CompositionNeedsZeroConstant";
    case ErrorKind::NotReversible: return "NotReversible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PipelinePrecondition: return "PipelinePrecondition";
    case ErrorKind::InsufficientDepth: return "InsufficientDepth";
    case ErrorKind::DegenerateCfrac: return "DegenerateCfrac";
    case ErrorKind::PatternMismatch: return "PatternMismatch";
    case ErrorKind::NonPolynomialRow: return "NonPolynomialRow";
    case ErrorKind::SingularDiagonal: return "SingularDiagonal";
    case ErrorKind::NotTridiagonal: return "NotTridiagonal";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::UnknownOracle: return "UnknownOracle";
    case ErrorKind::IndexRange: return "IndexRange";
    case ErrorKind::EvaluationPole: return "EvaluationPole";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::TypeErrorValue: return "TypeErrorValue";
  }
  return "UnknownError";
}

MathError::MathError(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& message)
    : std::runtime_error(message), offset_(offset), expected_(std::move(expected)) {}

void raise(ErrorKind kind, const std::string& message) { throw MathError(kind, message); }

}  // namespace seqpipe
