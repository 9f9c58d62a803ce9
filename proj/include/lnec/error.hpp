#pragma once

#include <stdexcept>
#include <string>

namespace lnec {

// Coarse classification; the CLI maps each kind onto a process exit code.
enum class ErrorKind {
  usage,
  validation,
  computation,
  scan_guard,
};

// All recoverable failures raised by the library. `code()` is a stable
// snake_case identifier (e.g. "cycle_detected") suitable for scripting.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage: return "usage";
    case ErrorKind::validation: return "validation";
    case ErrorKind::computation: return "computation";
    case ErrorKind::scan_guard: return "scan_guard";
  }
  return "unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, std::string code, const std::string& message) {
  throw Error(kind, std::move(code), message);
}

}  // namespace lnec
