#pragma once

#include <stdexcept>
#include <string>

namespace dgp {

/// Malformed arguments: unknown edge ids, wrong set sizes, bad field orders.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Graph text that cannot be parsed. Carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A statement was asked about a graph outside its hypotheses.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation would exceed its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Something that must hold by construction did not. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dgp
