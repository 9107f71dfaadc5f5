#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace breadthlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument outside an operation's domain (inv(0), n = 0, p not prime, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A family specification or command line that cannot be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A group (or an intermediate table) grew past the configured element cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t partial)
      : Error(what + " (reached " + std::to_string(partial) + " elements)"), partial_(partial) {}

  std::uint64_t partial_count() const { return partial_; }

 private:
  std::uint64_t partial_;
};

/// A mathematical invariant failed to hold. Always a bug, never an input problem.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace breadthlab
