#pragma once

#include <stdexcept>
#include <string>

namespace uldt {

// Error categories map onto CLI exit codes: config 2, data 3, backend 4.

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BackendError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Child process exited nonzero (or died) while a request was pending.
class BackendExitError : public BackendError {
 public:
  using BackendError::BackendError;
};

// Child wrote something that is not valid protocol; carries the offending line.
class BackendProtocolError : public BackendError {
 public:
  BackendProtocolError(const std::string& what, long line_number, std::string line)
      : BackendError(what + " (line " + std::to_string(line_number) + ": " + line + ")"),
        line_number_(line_number),
        line_(std::move(line)) {}

  long line_number() const { return line_number_; }
  const std::string& line() const { return line_; }

 private:
  long line_number_;
  std::string line_;
};

class BackendTimeoutError : public BackendError {
 public:
  using BackendError::BackendError;
};

}  // namespace uldt
