#pragma once

#include <stdexcept>
#include <string>

namespace bodysphere {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function (e.g. Hankel at z = 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A recurrence or product left the representable double range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Mode or order index out of bounds.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A point lies on (or too close to) the sphere surface r = d.
class InterfaceError : public Error {
 public:
  using Error::Error;
};

/// Field and source points coincide.
class CoincidentPointError : public Error {
 public:
  using Error::Error;
};

/// The interface determinant of a mode vanished.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, int order, double residual)
      : Error(what), order_(order), residual_(residual) {}

  int order() const { return order_; }
  double residual() const { return residual_; }

 private:
  int order_;
  double residual_;
};

/// Invalid user-supplied configuration or scenario data.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace bodysphere
