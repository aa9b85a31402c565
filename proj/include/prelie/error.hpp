#ifndef PRELIE_ERROR_HPP
#define PRELIE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace prelie {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  DimensionMismatch,
  AlgebraMismatch,
  ShapeMismatch,
  NotAnIdeal,
  NotSubalgebra,
  NotAbelian,
  IncompleteLattice,
  FieldNotFinite,
  BudgetExceeded,
  MalformedTree,
  VertexOutOfRange,
  NotIdempotent,
  NotHomomorphism,
  NotPreLie,
  ActionInvalid,
  AugmentationInvalid,
  UnknownGallery,
  TwoNotInvertible,
  ArityMismatch,
  Parse,
  Internal,
};

const char* errorCodeName(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; callers
// at the C boundary map them onto status values.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

} // namespace prelie

#endif
