#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sbvs {

enum class ErrorKind {
  parse,                 // malformed text input
  invalid_argument,      // bad parameter or violated precondition
  capacity,              // size cap or outlet capacity exceeded
  invalid_partition,     // partition fails validation against its graph
  constraint_violation,  // problem constraint (e.g. independent separator) not met
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_argument: return "precondition";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::invalid_partition: return "invalid-partition";
    case ErrorKind::constraint_violation: return "constraint";
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

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::parse, line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  /// 1-based line number; 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

inline Error precondition_error(const std::string& what) {
  return Error(ErrorKind::invalid_argument, what);
}

inline Error capacity_error(const std::string& what) { return Error(ErrorKind::capacity, what); }

}  // namespace sbvs
