#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lvd {

enum class ErrorKind {
  NotAPoset,
  NotALattice,
  NotDistributive,
  UnknownElement,
  ClosureTooLarge,
  MismatchedLattice,
  NotPrime,
  NoWitness,
  PreconditionViolation,
  InvalidSystem,
  InvalidSpace,
  InvalidAlgebra,
  TypeMismatch,
  NotInCont,
  SyntaxError,
  UnknownLatticeElement,
  UndeclaredVariable,
  BoxNotAvailable,
  ConstantNotAvailable,
  ParseError,
  SchemaError,
  DanglingReference,
  UsageError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A parse failure at a byte offset of the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lvd
