#include "ringkt/error.hpp"

namespace ringkt {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::BasisNotClosed: return "BasisNotClosed";
    case ErrorKind::ZetaNotIntegral: return "ZetaNotIntegral";
    case ErrorKind::ZetaOrderWrong: return "ZetaOrderWrong";
    case ErrorKind::ZetaActionNotFree: return "ZetaActionNotFree";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::InfiniteOrderGenerator: return "InfiniteOrderGenerator";
    case ErrorKind::UncertifiedIntegralRequest: return "UncertifiedIntegralRequest";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotARepresentation: return "NotARepresentation";
    case ErrorKind::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

bool is_spec_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedSpec:
    case ErrorKind::NotMonic:
    case ErrorKind::NotSquarefree:
    case ErrorKind::BasisNotClosed:
    case ErrorKind::ZetaNotIntegral:
    case ErrorKind::ZetaOrderWrong:
    case ErrorKind::ZetaActionNotFree:
      return true;
    default:
      return false;
  }
}

}  // namespace ringkt
