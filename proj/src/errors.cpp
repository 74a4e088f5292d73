#include "utimage/errors.hpp"

namespace utimage {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::NotMultilinear: return "NotMultilinear";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotUpperTriangular: return "NotUpperTriangular";
    case Errc::HypothesisViolation: return "HypothesisViolation";
    case Errc::TargetNotInImage: return "TargetNotInImage";
    case Errc::SingularDiagonal: return "SingularDiagonal";
    case Errc::NotProper: return "NotProper";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::DegreeUnsupported: return "DegreeUnsupported";
    case Errc::NotPrime: return "NotPrime";
  }
  return "UnknownError";
}

DomainError::DomainError(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

void fail(Errc code, const std::string& detail) { throw DomainError(code, detail); }

const char* internal_errc_name(InternalErrc code) {
  switch (code) {
    case InternalErrc::VerificationFailure: return "VerificationFailure";
    case InternalErrc::InconsistentSystem: return "InconsistentSystem";
    case InternalErrc::InternalInconsistency: return "InternalInconsistency";
  }
  return "UnknownInternalError";
}

InternalError::InternalError(InternalErrc code, const std::string& detail)
    : std::logic_error(std::string(internal_errc_name(code)) + ": " + detail), code_(code) {}

void fail_internal(InternalErrc code, const std::string& detail) {
  throw InternalError(code, detail);
}

}  // namespace utimage
