#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toroidal {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer coefficient arithmetic left the int64 range.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input that violates a semantic contract.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A knot invariant needed by an operation was declared Unknown.
class InvariantUnavailable : public Error {
 public:
  using Error::Error;
};

class NotDecomposable : public Error {
 public:
  using Error::Error;
};

/// Two independent computations disagreed; never caused by valid data.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace toroidal
