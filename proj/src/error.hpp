#pragma once

#include <stdexcept>
#include <string>

namespace swe {

// Coarse failure categories, mirrored one-to-one by the C API status codes.
enum class ErrorCode {
  invalid_argument,
  io,
  parse,
  mesh,
  runtime,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace swe
