#pragma once

#include <stdexcept>
#include <string>

namespace grnet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// bad arguments: mismatched (k,n), empty input, frozen vertex given where a
// mutable one is needed etc.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// a structural invariant of a model or seed does not hold
class InvariantViolation : public Error {
 public:
  InvariantViolation(const std::string& invariant, const std::string& detail)
      : Error(invariant + ": " + detail), invariant_(invariant) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

// internal cross-checks that should never fire
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class NotLaurent : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class NotMutable : public Error {
 public:
  using Error::Error;
};

class NotPlabicMutable : public Error {
 public:
  using Error::Error;
};

class Unbounded : public Error {
 public:
  using Error::Error;
};

}  // namespace grnet
