#include "momentfit/errors.hpp"

#include <sstream>

namespace momentfit {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DomainError:
      return "DOMAIN_ERROR";
    case ErrorCode::ParseError:
      return "PARSE_ERROR";
    case ErrorCode::InfeasibleRatio:
      return "INFEASIBLE_RATIO";
    case ErrorCode::BracketExhausted:
      return "BRACKET_EXHAUSTED";
    case ErrorCode::IterationLimit:
      return "ITERATION_LIMIT";
  }
  return "DOMAIN_ERROR";
}

int exit_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DomainError:
    case ErrorCode::ParseError:
      return 1;
    case ErrorCode::InfeasibleRatio:
    case ErrorCode::BracketExhausted:
    case ErrorCode::IterationLimit:
      return 2;
  }
  return 1;
}

std::string ParseError::format(const std::string& message, std::size_t line) {
  if (line == 0) return message;
  std::ostringstream os;
  os << message << " (line " << line << ")";
  return os.str();
}

NegativeValueError::NegativeValueError(std::size_t index, double value)
    : DomainError([&] {
        std::ostringstream os;
        os << "negative sample value " << value << " at index " << index;
        return os.str();
      }()),
      index_(index),
      value_(value) {}

OverflowAtOrderError::OverflowAtOrderError(double order)
    : DomainError([&] {
        std::ostringstream os;
        os << "power sum overflows at moment order " << order
           << "; use a log-domain path";
        return os.str();
      }()),
      order_(order) {}

}  // namespace momentfit
