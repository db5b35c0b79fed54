#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gjp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structurally well-formed input that violates a typing or grammar rule.
class ValidationError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind { Lexical, Syntax, Reference, Grammar, Type };

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& reason);

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string reason_;
};

/// Raised by the brute-force oracle when the completion space exceeds its ceiling.
/// An input file could not be read.
class FileError : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace gjp
