#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kmcds {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance or node-set text; carries the 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input violating an instance invariant (negative radius, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// No feasible solution exists (graph not k-connected, infeasible cover, ...).
class InfeasibleInstance : public Error {
 public:
  using Error::Error;
};

/// Sources and sinks cannot be separated without removing protected nodes.
class InfiniteCut : public Error {
 public:
  using Error::Error;
};

class NoPath : public Error {
 public:
  using Error::Error;
};

/// Primal-dual increase phase found no node able to grow while cuts remain.
class Stall : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A proven invariant failed at runtime. Always a bug or a violated model assumption.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

#define KMCDS_ENSURE(cond, msg)                                                          \
  do {                                                                                   \
    if (!(cond)) throw ::kmcds::InvariantViolation(std::string(msg) + " [" #cond "]"); \
  } while (0)

}  // namespace kmcds
