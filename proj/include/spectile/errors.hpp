#pragma once

#include <stdexcept>
#include <string>

namespace spectile {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (rational literal, interval list, spectrum, exponents).
class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidGeometry : public Error {
 public:
  using Error::Error;
};

class InvalidSpectrum : public Error {
 public:
  using Error::Error;
};

class ZeroFrequency : public Error {
 public:
  using Error::Error;
};

class ZeroInversion : public Error {
 public:
  using Error::Error;
};

class NotEqualVectors : public Error {
 public:
  using Error::Error;
};

class NonIntegerPeriod : public Error {
 public:
  using Error::Error;
};

class EmptyBasis : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class ZeroRadius : public Error {
 public:
  using Error::Error;
};

/// A search or decision procedure would exceed a configured resource cap.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Internal invariant failures. These indicate a bug (or a counterexample to a
/// proven statement) and map to exit status 3 in the CLI.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace spectile
