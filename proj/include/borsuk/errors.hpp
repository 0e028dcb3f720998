#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace borsuk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (bad n, dimension
/// mismatch, duplicate points, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The instance exceeds what the exact method can enumerate.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. Line and column are 1-based; column 0 means
/// "whole line".
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column,
             const std::string& what)
      : Error(source + ":" + std::to_string(line) + ":" +
              std::to_string(column) + ": " + what),
        source_(std::move(source)),
        line_(line),
        column_(column) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace borsuk
