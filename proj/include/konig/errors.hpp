#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace konig {

/// Malformed caller input: bad vertex ids, partial assignments, invalid generator specs.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that does not follow one of the graph file formats.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called outside its documented domain (e.g. leaf peeling a cyclic graph).
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// Exhaustive routines refuse inputs above their vertex budget.
class SizeLimitError : public InputError {
 public:
  using InputError::InputError;
};

/// A checker produced a certificate its own verifier rejects. Always a bug in this library.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace konig
