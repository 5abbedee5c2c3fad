#include "afrob/error.hpp"

namespace afrob {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownArgument: return "UnknownArgument";
    case ErrorKind::InvalidArgumentName: return "InvalidArgumentName";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::UnsupportedSemantics: return "UnsupportedSemantics";
    case ErrorKind::ArgumentSetMismatch: return "ArgumentSetMismatch";
    case ErrorKind::LabellingMismatch: return "LabellingMismatch";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UndeclaredArgument: return "UndeclaredArgument";
  }
  return "Unknown";
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& reason)
    : Error(ErrorKind::ParseError,
            "parse error at line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + reason),
      line_(line),
      column_(column),
      reason_(reason) {}

UndeclaredArgument::UndeclaredArgument(std::string name, std::size_t line)
    : Error(ErrorKind::UndeclaredArgument,
            "undeclared argument '" + name + "' at line " + std::to_string(line)),
      name_(std::move(name)),
      line_(line) {}

}  // namespace afrob
