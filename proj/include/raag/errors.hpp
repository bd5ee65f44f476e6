#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace raag {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex or generator name that does not belong to the graph.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Operands that cannot be combined (different graphs, v = w, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A transvection whose domination condition fails.
class LegalityError : public Error {
 public:
  using Error::Error;
};

/// A vertex pair that does not satisfy the embedding hypothesis.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// The brute-force word oracle ran out of budget before deciding.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// A generator-image table whose claimed inverse does not invert it.
class InverseMismatchError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph or word text. `line()` is 0 when not line-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace raag
