#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace frobcone {

// Error taxonomy mirrored by the CLI exit codes:
//   Validation    -> exit 1 (bad input, violated precondition)
//   ResourceGuard -> exit 2 (configured enumeration limit exceeded)
//   Internal      -> exit 3 (invariant violation; never expected)
enum class ErrorKind { Validation, ResourceGuard, Internal };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail_validation(const std::string& code, const std::string& message) {
  throw Error(ErrorKind::Validation, code, message);
}

[[noreturn]] inline void fail_guard(const std::string& code, const std::string& message) {
  throw Error(ErrorKind::ResourceGuard, code, message);
}

[[noreturn]] inline void fail_internal(const std::string& message) {
  throw Error(ErrorKind::Internal, "InternalInvariant", message);
}

inline void internal_check(bool ok, const std::string& message) {
  if (!ok) fail_internal(message);
}

}  // namespace frobcone
