#pragma once

#include <stdexcept>
#include <string>

namespace mqm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document or token; the message carries the location.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Enumeration budget exhausted before a scan could complete.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// A precondition on the mathematical input does not hold (e.g. a word that
/// is not reduced, a generator set that is not independent).
class DomainError : public Error {
public:
  using Error::Error;
};

/// The construction's hypotheses cannot be satisfied for the given input.
class HypothesisFailure : public Error {
public:
  using Error::Error;
};

} // namespace mqm
