#pragma once

#include <stdexcept>
#include <string>

namespace kronkit {

/// Malformed textual input (partition syntax, monotonicity).
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Arguments that must share a size (degree) do not.
class SizeMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A shape or hypothesis precondition of an operation is violated.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A requested evaluation route does not apply to the given triple.
class NotApplicable : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An exactness check failed; always indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace kronkit
