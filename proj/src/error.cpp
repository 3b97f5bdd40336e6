#include "splinelab/error.hpp"

namespace splinelab {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DisconnectedInput: return "DisconnectedInput";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::NotCutEdge: return "NotCutEdge";
    case ErrorKind::NotCutVertex: return "NotCutVertex";
    case ErrorKind::BadSubsetSize: return "BadSubsetSize";
    case ErrorKind::BadComponent: return "BadComponent";
    case ErrorKind::NotNaturallyLabeled: return "NotNaturallyLabeled";
    case ErrorKind::NotCliqued: return "NotCliqued";
    case ErrorKind::GraphMismatch: return "GraphMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::IntegralityViolation: return "IntegralityViolation";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace splinelab
