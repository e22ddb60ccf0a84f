#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fpure {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. position() is a 0-based byte offset into the text
// that was handed to the parser.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        message_(message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& bare_message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

// Violated precondition: ring mismatch, non-prime modulus, t <= 0, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

// Operation requested on an input class it does not handle (e.g. the exact
// radical test on a non-monomial ideal).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A configured resource limit was hit. cap() names the limit.
class ResourceCapError : public Error {
 public:
  ResourceCapError(std::string cap, const std::string& detail)
      : Error("resource cap '" + cap + "' exceeded: " + detail), cap_(std::move(cap)) {}

  const std::string& cap() const noexcept { return cap_; }

 private:
  std::string cap_;
};

// Exponent arithmetic would leave [0, 2^63).
class OverflowError : public ResourceCapError {
 public:
  explicit OverflowError(const std::string& detail) : ResourceCapError("exponent_overflow", detail) {}
};

}  // namespace fpure
