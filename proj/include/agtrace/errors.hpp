#pragma once

#include <stdexcept>
#include <string>

namespace agtrace {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed user input (tower parameters, curve/divisor strings, config files).
class ParseError : public Error {
  public:
    using Error::Error;
};

class NotPrime : public ParseError {
  public:
    using ParseError::ParseError;
};

class TooLarge : public ParseError {
  public:
    using ParseError::ParseError;
};

class InvalidParameter : public ParseError {
  public:
    using ParseError::ParseError;
};

class DivisionByZero : public Error {
  public:
    using Error::Error;
};

class SingularCurve : public ParseError {
  public:
    using ParseError::ParseError;
};

class PoleAtPoint : public Error {
  public:
    using Error::Error;
};

class UnsupportedDivisor : public ParseError {
  public:
    using ParseError::ParseError;
};

class PointInSupport : public ParseError {
  public:
    using ParseError::ParseError;
};

class DegreeTooLarge : public ParseError {
  public:
    using ParseError::ParseError;
};

/// A function claimed to lie in L(G) could not be expressed in the code
/// basis; indicates an internal inconsistency, never a user error.
class CoordinateSolveFailed : public Error {
  public:
    using Error::Error;
};

class ConditionOneViolated : public Error {
  public:
    using Error::Error;
};

class HasRationalZero : public ParseError {
  public:
    using ParseError::ParseError;
};

class DegenerateInput : public Error {
  public:
    using Error::Error;
};

class Unsupported : public Error {
  public:
    using Error::Error;
};

/// Internal invariant violation (a bug, not bad input).
class InternalError : public Error {
  public:
    using Error::Error;
};

}  // namespace agtrace
