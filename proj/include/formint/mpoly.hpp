#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "formint/monomial.hpp"

namespace formint {

using Rational = mpq_class;
using Integer = mpz_class;

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted by decreasing grevlex order with no zero
/// coefficients, so structural equality is value equality. A polynomial built
/// without a ring (plain constants) adopts the ring of whatever it meets.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}
  MPoly(RingPtr ring, const Rational& c);
  MPoly(RingPtr ring, std::vector<Term> terms);  // normalises order and zeros

  static MPoly constant(const Rational& c) { return MPoly(nullptr, c); }
  static MPoly var(RingPtr ring, Var v, unsigned power = 1);
  static MPoly monomial(RingPtr ring, const Monomial& m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  MPoly with_ring(RingPtr ring) const;

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].coeff == 1; }
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_value() const;  // requires is_constant()

  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  const Monomial& leading_mono() const { return terms_.front().mono; }

  unsigned total_degree() const;
  unsigned degree(Var v) const;
  unsigned min_degree(Var v) const;
  bool depends_on(Var v) const;
  /// Bit i set iff variable i occurs.
  std::uint32_t support() const;

  /// Coefficients of v^0, v^1, ..., v^deg as polynomials free of v.
  std::vector<MPoly> coefficients(Var v) const;
  static MPoly from_coefficients(const RingPtr& ring, Var v, const std::vector<MPoly>& coeffs);
  MPoly coefficient(Var v, unsigned k) const;
  MPoly leading_coefficient(Var v) const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rational& c) const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly mul_term(const Monomial& m, const Rational& c) const;
  MPoly pow(unsigned e) const;

  /// Exact quotient if `d` divides this polynomial, otherwise nullopt.
  std::optional<MPoly> divide_exact(const MPoly& d) const;
  /// Exact quotient; throws InternalAssertion when `d` does not divide.
  MPoly operator/(const MPoly& d) const;

  MPoly derivative(Var v) const;
  MPoly substitute(Var v, const MPoly& value) const;
  MPoly evaluate(Var v, const Rational& value) const;

  /// Least common denominator of the coefficients times the sign/scale that
  /// makes the result integral, primitive and with positive leading coefficient.
  Rational canonical_scale() const;
  /// Integral, content one, positive leading coefficient.
  MPoly canonical() const;
  /// Leading coefficient (grevlex) one.
  MPoly monic() const;

  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }
  /// Total order used for deterministic sorting.
  static int compare(const MPoly& a, const MPoly& b);

  std::string to_string() const;

 private:
  friend class MPolyBuilder;
  RingPtr ring_;
  std::vector<Term> terms_;
};

inline MPoly operator*(const Rational& c, const MPoly& p) { return p * c; }

/// Picks the ring shared by `a` and `b`; throws RingMismatch on conflict.
RingPtr common_ring(const RingPtr& a, const RingPtr& b);

std::string format_rational(const Rational& q);

}  // namespace formint
