#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace formint {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("zero denominator") {}
};

class ZeroInput : public Error {
 public:
  explicit ZeroInput(const std::string& what) : Error(what) {}
};

class BothZero : public Error {
 public:
  BothZero() : Error("gcd of two zero polynomials") {}
};

/// Raised when two operands live in incompatible polynomial rings.
class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different polynomial rings") {}
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionViolated : public Error {
 public:
  explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

class NotPolynomialInVar : public PreconditionViolated {
 public:
  explicit NotPolynomialInVar(const std::string& what) : PreconditionViolated(what) {}
};

class NotCoprime : public PreconditionViolated {
 public:
  NotCoprime() : PreconditionViolated("numerator and denominator are not coprime") {}
};

class NonInvertibleDenominator : public PreconditionViolated {
 public:
  NonInvertibleDenominator() : PreconditionViolated("denominator is not invertible modulo the residue polynomial") {}
};

class IndexOutOfRange : public PreconditionViolated {
 public:
  explicit IndexOutOfRange(const std::string& what) : PreconditionViolated(what) {}
};

class NotHomogeneous : public PreconditionViolated {
 public:
  NotHomogeneous() : PreconditionViolated("polynomial is not homogeneous") {}
};

class DegreeMismatch : public PreconditionViolated {
 public:
  explicit DegreeMismatch(const std::string& what) : PreconditionViolated(what) {}
};

/// The input form is not closed. `indices` and `coefficient` describe one
/// nonzero coefficient of its exterior derivative.
class NotClosed : public Error {
 public:
  NotClosed(std::vector<int> indices, std::string coefficient)
      : Error("form is not closed: d(w) has coefficient " + coefficient + " on " + describe(indices)),
        indices_(std::move(indices)),
        coefficient_(std::move(coefficient)) {}

  const std::vector<int>& indices() const { return indices_; }
  const std::string& coefficient() const { return coefficient_; }

 private:
  static std::string describe(const std::vector<int>& idx) {
    std::string s = "basis(";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s + ")";
  }
  std::vector<int> indices_;
  std::string coefficient_;
};

/// The Jacobian ideal of the polar polynomial is not zero-dimensional.
class NotSmooth : public Error {
 public:
  NotSmooth() : Error("hypersurface is not smooth") {}
};

class RegularityViolated : public Error {
 public:
  explicit RegularityViolated(const std::string& what) : Error(what) {}
};

/// An internal self-check failed. Seeing one of these is a bug.
class InternalAssertion : public Error {
 public:
  explicit InternalAssertion(const std::string& what) : Error("internal assertion failed: " + what) {}
};

class RationalityAssertionFailed : public InternalAssertion {
 public:
  explicit RationalityAssertionFailed(const std::string& what) : InternalAssertion(what) {}
};

/// Expanding the derivative of a primitive left logarithms that do not cancel.
class ResidualLogarithm : public Error {
 public:
  ResidualLogarithm() : Error("logarithmic terms do not cancel in the derivative expansion") {}
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, std::vector<std::string> expected, const std::string& found)
      : Error(format(line, column, expected, found)), line_(line), column_(column), expected_(std::move(expected)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string format(int line, int column, const std::vector<std::string>& expected, const std::string& found) {
    std::string s = "parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) s += (i ? " or " : "") + expected[i];
    return s + ", found " + found;
  }
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

}  // namespace formint
