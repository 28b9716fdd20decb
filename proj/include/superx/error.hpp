#pragma once

#include <stdexcept>
#include <string>

namespace superx {

  // Root of every exception raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed textual input: group names, catalog names, serialized data.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // Input exceeds one of the fixed size limits (group order, ground size).
  class CapacityError : public Error {
   public:
    using Error::Error;
  };

  // An internal consistency check failed: group axioms, table invariants,
  // quotient well-definedness, uniqueness assertions.
  class ConsistencyError : public Error {
   public:
    using Error::Error;
  };

  // A precondition on the arguments is violated.
  class DomainError : public Error {
   public:
    using Error::Error;
  };

}  // namespace superx
