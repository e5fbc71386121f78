#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsemi {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands carry incompatible scalar modes (rational vs symbolic).
class ModeMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a scalar or polynomial literal.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A linear form was evaluated past its valid degree.
class DegreeOverflow : public Error {
 public:
  DegreeOverflow(int requested, int valid);
  int requested() const { return requested_; }
  int valid() const { return valid_; }

 private:
  int requested_;
  int valid_;
};

/// A form or recurrence stops being regular at index n.
class NotRegular : public Error {
 public:
  NotRegular(const std::string& message, int n);
  int index() const { return n_; }

 private:
  int n_;
};

/// Input violates a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsemi
