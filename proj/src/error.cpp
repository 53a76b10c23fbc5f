#include "lvdual/error.hpp"

namespace lvd {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorKind::MismatchedLattice: return "MismatchedLattice";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::InvalidSystem: return "InvalidSystem";
    case ErrorKind::InvalidSpace: return "InvalidSpace";
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::NotInCont: return "NotInCont";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownLatticeElement: return "UnknownLatticeElement";
    case ErrorKind::UndeclaredVariable: return "UndeclaredVariable";
    case ErrorKind::BoxNotAvailable: return "BoxNotAvailable";
    case ErrorKind::ConstantNotAvailable: return "ConstantNotAvailable";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace lvd
