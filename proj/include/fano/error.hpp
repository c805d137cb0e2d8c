#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fano {

/// Failure categories surfaced by the command-line front end.
enum class ErrorKind { Precondition, Inconsistency, Unsupported };

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Inconsistency: return "inconsistency";
    case ErrorKind::Unsupported: return "unsupported";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A caller violated an operation's documented precondition.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

/// An internal identity that must hold did not; indicates a bug or a bad convention.
class InconsistencyError : public Error {
 public:
  explicit InconsistencyError(const std::string& what) : Error(ErrorKind::Inconsistency, what) {}
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(ErrorKind::Unsupported, what) {}
};

}  // namespace fano
