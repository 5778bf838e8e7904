#pragma once

#include <stdexcept>
#include <string>

namespace citenet {

enum class ErrorKind {
  usage,      // bad arguments or preconditions the caller controls
  data,       // malformed or invalid input data
  numerical,  // non-convergence, vanishing denominators, overflow
};

const char* to_string(ErrorKind kind) noexcept;

/// Base class for every error raised by the library. `subject` names the
/// journal or matrix cell the error is about, when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string subject = {})
      : std::runtime_error(message), kind_(kind), subject_(std::move(subject)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& subject() const noexcept { return subject_; }

 private:
  ErrorKind kind_;
  std::string subject_;
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& message, std::string subject = {})
      : Error(ErrorKind::data, message, std::move(subject)) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& message, std::string subject = {})
      : Error(ErrorKind::numerical, message, std::move(subject)) {}
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message, std::string subject = {})
      : Error(ErrorKind::usage, message, std::move(subject)) {}
};

}  // namespace citenet
