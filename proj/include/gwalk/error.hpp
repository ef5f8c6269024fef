#pragma once

#include <stdexcept>
#include <string>

namespace gwalk {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text; `position()` is the byte offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("polynomials belong to different rings") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Ordering matrix or weight vector that does not define a valid term ordering.
class InvalidOrdering : public Error {
 public:
  using Error::Error;
};

/// A marked basis whose markings disagree with an ordering or violate basis invariants.
class MarkingError : public Error {
 public:
  using Error::Error;
};

/// A weight vector that lies outside the cone it was claimed to belong to.
class OutsideCone : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A computation ran past its deadline.
class Timeout : public Error {
 public:
  Timeout() : Error("deadline exceeded") {}
};

}  // namespace gwalk
