#pragma once

#include <string>

#include "formint/mpoly.hpp"

namespace formint {

/// Quotient of polynomials in lowest terms. The denominator is canonical
/// (integral, content one, positive leading coefficient), so equal values
/// have identical representations.
class RatFunc {
 public:
  RatFunc() : num_(), den_(MPoly::constant(1)) {}
  RatFunc(const MPoly& p);  // NOLINT(google-explicit-constructor)
  RatFunc(const MPoly& num, const MPoly& den);
  static RatFunc constant(const Rational& c) { return RatFunc(MPoly::constant(c)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  RingPtr ring() const { return common_ring(num_.ring(), den_.ring()); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }
  bool depends_on(Var v) const { return num_.depends_on(v) || den_.depends_on(v); }
  std::uint32_t support() const { return num_.support() | den_.support(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator*(const Rational& c) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc inverse() const;
  RatFunc pow(int e) const;

  RatFunc derivative(Var v) const;
  /// Substitutes a rational function for `v`.
  RatFunc substitute(Var v, const RatFunc& value) const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  static int compare(const RatFunc& a, const RatFunc& b);

  /// Integer-coefficient display, e.g. "1/(2*x)" or "(2*t^2+2)/(x*y*z)".
  std::string to_string() const;

 private:
  struct Normalized {};
  RatFunc(MPoly num, MPoly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  MPoly num_;
  MPoly den_;
};

inline RatFunc operator*(const Rational& c, const RatFunc& f) { return f * c; }

/// Builds the canonical representative of num/den.
RatFunc normalize_ratfunc(const MPoly& num, const MPoly& den);

}  // namespace formint
