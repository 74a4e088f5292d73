#pragma once

#include <stdexcept>
#include <string>

namespace utimage {

// Error codes for invalid input or unsatisfiable requests. The CLI maps
// these to exit code 2.
enum class Errc {
  ParseError,
  NotMultilinear,
  DivisionByZero,
  FieldMismatch,
  DimensionMismatch,
  IndexOutOfRange,
  NotUpperTriangular,
  HypothesisViolation,
  TargetNotInImage,
  SingularDiagonal,
  NotProper,
  BudgetExceeded,
  DegreeUnsupported,
  NotPrime,
};

const char* errc_name(Errc code);

class DomainError : public std::runtime_error {
 public:
  DomainError(Errc code, const std::string& detail);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail);

// Breached internal invariants. These indicate a bug in this library, never
// bad input; the CLI maps them to exit code 1.
enum class InternalErrc {
  VerificationFailure,
  InconsistentSystem,
  InternalInconsistency,
};

const char* internal_errc_name(InternalErrc code);

class InternalError : public std::logic_error {
 public:
  InternalError(InternalErrc code, const std::string& detail);
  InternalErrc code() const { return code_; }

 private:
  InternalErrc code_;
};

[[noreturn]] void fail_internal(InternalErrc code, const std::string& detail);

}  // namespace utimage
