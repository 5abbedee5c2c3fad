#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace afrob {

enum class ErrorKind {
  UnknownArgument,
  InvalidArgumentName,
  SizeLimit,
  NotAdmissible,
  UnsupportedSemantics,
  ArgumentSetMismatch,
  LabellingMismatch,
  InternalInvariantViolation,
  ParseError,
  UndeclaredArgument,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed apx input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& reason);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string reason_;
};

class UndeclaredArgument : public Error {
 public:
  UndeclaredArgument(std::string name, std::size_t line);

  const std::string& name() const noexcept { return name_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string name_;
  std::size_t line_;
};

}  // namespace afrob
