#pragma once

#include <stdexcept>
#include <string>

namespace steem {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

/// A degree escaped the truncation bound of a bounded object.
struct OutOfBound : Error {
  using Error::Error;
};

/// A Steenrod action entry is flagged unknown and the operation needed it.
struct UnknownAction : Error {
  using Error::Error;
};

struct NotReduced : Error {
  using Error::Error;
};

struct NotExact : Error {
  using Error::Error;
};

struct NoCollapse : Error {
  using Error::Error;
};

struct InstanceUnavailable : Error {
  using Error::Error;
};

/// A structural identity (Adem, instability, d^2 = 0, simplicial identities,
/// associativity...) failed on data handed to a constructor.
struct InvariantViolation : Error {
  using Error::Error;
};

/// Face/degeneracy maps violate the simplicial (or cosimplicial) identities.
struct SimplicialIdentityViolation : InvariantViolation {
  using InvariantViolation::InvariantViolation;
};

/// A basepoint was required but the simplicial set has none.
struct MissingBasepoint : Error {
  using Error::Error;
};

}  // namespace steem
