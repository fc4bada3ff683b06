#ifndef FTOP_ERROR_HPP_
#define FTOP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ftop {

enum class ErrorKind {
  kMissingExtremes,
  kNotALattice,
  kOutOfRange,
  kDomainMismatch,
  kNotACover,
  kTooLarge,
  kSchemaError,
  kWriteFailure,
  kSyntaxError,
  kUnknownName,
  kDuplicateDefinition,
  kCyclicDefinition,
  kArityError,
};

inline std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMissingExtremes: return "MissingExtremes";
    case ErrorKind::kNotALattice: return "NotALattice";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kDomainMismatch: return "DomainMismatch";
    case ErrorKind::kNotACover: return "NotACover";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kSchemaError: return "SchemaError";
    case ErrorKind::kWriteFailure: return "WriteFailure";
    case ErrorKind::kSyntaxError: return "SyntaxError";
    case ErrorKind::kUnknownName: return "UnknownName";
    case ErrorKind::kDuplicateDefinition: return "DuplicateDefinition";
    case ErrorKind::kCyclicDefinition: return "CyclicDefinition";
    case ErrorKind::kArityError: return "ArityError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and tests) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ftop

#endif  // FTOP_ERROR_HPP_
