#pragma once

#include <stdexcept>
#include <string>

namespace organiq {

enum class Status {
  Ok = 0,
  ConfigError,
  EncodingError,
  InversionError,
  UnsupportedCircuit,
  NumericError,
  InsufficientData,
  FormatError,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}

  Status status() const { return status_; }

 private:
  Status status_;
};

[[noreturn]] inline void fail(Status status, const std::string& message) {
  throw Error(status, message);
}

}  // namespace organiq
