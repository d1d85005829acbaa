#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace mcdm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed CSV input. `line` is 1-based and counts physical lines of the
/// source text; `column` is the 1-based field index when a single cell is at fault.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line,
             std::optional<std::size_t> column = std::nullopt)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::optional<std::size_t> column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::optional<std::size_t> column_;
};

class DuplicateIdError : public Error {
 public:
  using Error::Error;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

/// A computation whose denominator or range collapses to zero.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant; never expected on validated input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcdm
