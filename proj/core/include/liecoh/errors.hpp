#pragma once

#include <stdexcept>
#include <string>

namespace liecoh {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeOutOfRange : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeZero : public Error {
 public:
  using Error::Error;
};

class DuplicatePair : public Error {
 public:
  using Error::Error;
};

// Quadratic structure axioms.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class Degenerate : public Error {
 public:
  using Error::Error;
};

class NotInvariant : public Error {
 public:
  NotInvariant(int i, int j, int k, const std::string& what)
      : Error(what), i_(i), j_(j), k_(k) {}
  int i() const { return i_; }
  int j() const { return j_; }
  int k() const { return k_; }

 private:
  int i_, j_, k_;
};

class ZeroLambda : public Error {
 public:
  using Error::Error;
};

}  // namespace liecoh
