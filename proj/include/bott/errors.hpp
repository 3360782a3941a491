#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bott {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFiniteType : public Error {
 public:
  using Error::Error;
};

class NotDominant : public Error {
 public:
  using Error::Error;
};

class GuardrailExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised when a Newton recursion produces a coefficient not divisible by k.
/// This can only happen through an internal bug.
class NonIntegralPlethysm : public Error {
 public:
  using Error::Error;
};

class NotDecomposable : public Error {
 public:
  using Error::Error;
};

/// 64-bit multiplicity arithmetic overflowed.
class Overflow : public Error {
 public:
  using Error::Error;
};

/// Weight length does not match the rank of the root system.
class RankMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected)
      : Error("parse error at position " + std::to_string(position) +
              ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace bott
