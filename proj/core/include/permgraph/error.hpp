#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permgraph {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a precondition (bad vertex, self-loop, size mismatch, ...).
class MalformedInput : public Error {
 public:
  using Error::Error;
};

// Text could not be decoded. `offset` is the byte where decoding stopped.
class ParseError : public MalformedInput {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : MalformedInput(what + " (at byte " + std::to_string(offset) + ")"),
        reason_(what),
        offset_(offset) {}

  const std::string& reason() const noexcept { return reason_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::string reason_;
  std::size_t offset_;
};

// An exhaustive search was asked to run above its configured order bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Operation called on an input outside the class it is defined for.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace permgraph
