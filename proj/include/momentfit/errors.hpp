#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace momentfit {

// Stable diagnostic codes. The CLI prints exactly these strings on stderr;
// exit status is 1 for input errors and 2 for numerical failures.
enum class ErrorCode {
  DomainError,       // invalid argument or parameter       (exit 1)
  ParseError,        // malformed input file or flag value  (exit 1)
  InfeasibleRatio,   // moment pair admits no solution      (exit 2)
  BracketExhausted,  // bracket expansion failed            (exit 2)
  IterationLimit,    // bisection cap hit before tolerance  (exit 2)
};

const char* to_string(ErrorCode code) noexcept;
int exit_status(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* code_string() const noexcept { return to_string(code_); }
  int exit_status() const noexcept { return momentfit::exit_status(code_); }

 private:
  ErrorCode code_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error(ErrorCode::DomainError, message) {}
};

class InfeasibleRatioError : public Error {
 public:
  explicit InfeasibleRatioError(const std::string& message)
      : Error(ErrorCode::InfeasibleRatio, message) {}
};

class BracketExhaustedError : public Error {
 public:
  explicit BracketExhaustedError(const std::string& message)
      : Error(ErrorCode::BracketExhausted, message) {}
};

class IterationLimitError : public Error {
 public:
  explicit IterationLimitError(const std::string& message)
      : Error(ErrorCode::IterationLimit, message) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0)
      : Error(ErrorCode::ParseError, format(message, line)), line_(line) {}

  // 1-based line number of the offending input; 0 when not applicable.
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& message, std::size_t line);
  std::size_t line_;
};

class MissingColumnError : public ParseError {
 public:
  explicit MissingColumnError(const std::string& column)
      : ParseError("column '" + column + "' not found in csv header") {}
};

class EmptyDataError : public DomainError {
 public:
  EmptyDataError() : DomainError("input contains no samples") {}
};

class NegativeValueError : public DomainError {
 public:
  NegativeValueError(std::size_t index, double value);

  std::size_t index() const noexcept { return index_; }
  double value() const noexcept { return value_; }

 private:
  std::size_t index_;
  double value_;
};

class OverflowAtOrderError : public DomainError {
 public:
  explicit OverflowAtOrderError(double order);

  double order() const noexcept { return order_; }

 private:
  double order_;
};

}  // namespace momentfit
