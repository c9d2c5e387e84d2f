#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skelcur {

enum class ErrorKind {
  ConvergenceFailure,
  RankOutOfRange,
  NotSymmetric,
  IndexOutOfRange,
  DimensionMismatch,
  BudgetExceeded,
  DegenerateStart,
  NonPositiveValue,
  InvalidDecayParams,
  InvalidArgument,
  IoError,
  ParseError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DegenerateStart: return "DegenerateStart";
    case ErrorKind::NonPositiveValue: return "NonPositiveValue";
    case ErrorKind::InvalidDecayParams: return "InvalidDecayParams";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Exception carrying a machine-checkable error kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

namespace detail {

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) raise(kind, what);
}

}  // namespace detail
}  // namespace skelcur
