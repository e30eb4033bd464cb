#pragma once

#include <stdexcept>
#include <string>

namespace tightpath {

enum class ErrorKind {
  InvalidInput,
  Unsupported,
  Precondition,
  Resource,
};

// Every library failure is reported through this type so the CLI can map the
// kind onto its exit-code contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Resource: return "resource";
  }
  return "unknown";
}

}  // namespace tightpath
