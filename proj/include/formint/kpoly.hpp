#pragma once

#include <vector>

#include "formint/ratfunc.hpp"

namespace formint {

/// Dense univariate polynomial in `var` whose coefficients are rational
/// functions free of `var`. This is K[v] with K the field generated by the
/// remaining ring variables.
class KPoly {
 public:
  KPoly(RingPtr ring, Var var) : ring_(std::move(ring)), var_(var) {}
  KPoly(RingPtr ring, Var var, std::vector<RatFunc> coeffs);

  static KPoly from_mpoly(const MPoly& p, Var var);
  /// Requires the denominator of `f` to be free of `var`.
  static KPoly from_ratfunc(const RatFunc& f, Var var);
  MPoly numerator_over(const MPoly& common_den) const;
  RatFunc to_ratfunc() const;
  /// Clears denominators; the result is a polynomial multiple of this one.
  MPoly to_mpoly_scaled() const;

  const RingPtr& ring() const { return ring_; }
  Var var() const { return var_; }
  const std::vector<RatFunc>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RatFunc& lc() const { return c_.back(); }
  RatFunc coeff(int k) const;

  KPoly operator+(const KPoly& o) const;
  KPoly operator-(const KPoly& o) const;
  KPoly operator-() const;
  KPoly operator*(const KPoly& o) const;
  KPoly operator*(const RatFunc& c) const;
  bool operator==(const KPoly& o) const { return c_ == o.c_; }

  void divmod(const KPoly& d, KPoly& q, KPoly& r) const;
  KPoly operator%(const KPoly& d) const;
  KPoly operator/(const KPoly& d) const;  // quotient only
  KPoly monic() const;
  KPoly derivative() const;

  /// Monic gcd.
  static KPoly gcd(const KPoly& a, const KPoly& b);
  /// s*a + t*b = gcd(a, b) (monic).
  static KPoly ext_gcd(const KPoly& a, const KPoly& b, KPoly& s, KPoly& t);
  /// Inverse of this polynomial modulo m; throws NonInvertibleDenominator.
  KPoly inverse_mod(const KPoly& m) const;

 private:
  void trim();
  RingPtr ring_;
  Var var_;
  std::vector<RatFunc> c_;
};

/// Least common multiple of canonical polynomials.
MPoly lcm(const MPoly& a, const MPoly& b);

}  // namespace formint
