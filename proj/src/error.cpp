#include "dlab/error.hpp"

namespace dlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotUnitModulus: return "NotUnitModulus";
    case ErrorKind::DegenerateScalar: return "DegenerateScalar";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorKind::InvalidComponent: return "InvalidComponent";
    case ErrorKind::UnknownComponent: return "UnknownComponent";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantFailure: return "InvariantFailure";
  }
  return "Unknown";
}

}  // namespace dlab
