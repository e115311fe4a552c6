#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace udim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size or tolerance argument outside its documented domain.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Graph construction rejected a self-loop, parallel edge or duplicate label.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// The Mycielskian would reuse a label it reserves for its own vertices.
class LabelCollision : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line()` is 1-based, or 0 when not line oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace udim
