#pragma once

#include <stdexcept>
#include <string>

namespace ringkt {

enum class ErrorKind {
  // exact-linalg
  DimensionMismatch,
  // number-field (spec validation)
  MalformedSpec,
  NotMonic,
  NotSquarefree,
  BasisNotClosed,
  ZetaNotIntegral,
  ZetaOrderWrong,
  ZetaActionNotFree,
  ZeroDivisor,
  // eta-engine / limit-tower
  NotAdmissible,
  InfiniteOrderGenerator,
  UncertifiedIntegralRequest,
  ShapeMismatch,
  // ind-res
  NotASubgroup,
  NotARepresentation,
  UnsupportedGroup,
  // requested object exceeds the enumeration budget
  TooLarge,
  // internal consistency checks that should never fire on valid data
  InvariantViolation,
};

const char* to_string(ErrorKind kind);

/// True for errors caused by a malformed or inconsistent field description.
bool is_spec_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Throws InvariantViolation when `cond` is false. Used for checks that hold
/// by construction; a failure indicates a bug, never bad input.
inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::InvariantViolation, what);
}

}  // namespace ringkt
