#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace elat {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text could not be parsed. `position` is a 0-based offset into the
/// offending string (or line number for files, see `field`).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position, std::string field = {})
      : Error(what), position_(position), field_(std::move(field)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t position_;
  std::string field_;
};

/// A configured resource bound (group order, enumeration size) was exceeded.
class BoundError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace elat
