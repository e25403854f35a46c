#include "formint/ratfunc.hpp"

#include "formint/algebra.hpp"
#include "formint/errors.hpp"

namespace formint {

RatFunc normalize_ratfunc(const MPoly& num, const MPoly& den) { return RatFunc(num, den); }

RatFunc::RatFunc(const MPoly& p) : num_(p), den_(MPoly(p.ring(), Rational(1))) {}

RatFunc::RatFunc(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw ZeroDenominator();
  RingPtr ring = common_ring(num.ring(), den.ring());
  if (num.is_zero()) {
    num_ = MPoly(ring);
    den_ = MPoly(ring, Rational(1));
    return;
  }
  if (den.is_constant()) {
    num_ = (num * (1 / den.constant_value())).with_ring(ring);
    den_ = MPoly(ring, Rational(1));
    return;
  }
  MPoly g = gcd(num, den);
  MPoly n = g.is_constant() ? num : num / g;
  MPoly d = g.is_constant() ? den : den / g;
  Rational s = d.canonical_scale();
  num_ = (n * s).with_ring(ring);
  den_ = (d * s).with_ring(ring);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Normalized{}); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    if (den_.is_constant()) return RatFunc(num_ + o.num_, den_, Normalized{});
    return RatFunc(num_ + o.num_, den_);
  }
  if (den_.is_constant()) return RatFunc(num_ * o.den_ + o.num_, o.den_, Normalized{});
  if (o.den_.is_constant()) return RatFunc(num_ + o.num_ * den_, den_, Normalized{});
  MPoly g = gcd(den_, o.den_);
  if (g.is_constant()) {
    // Coprime denominators give a reduced sum.
    MPoly d = den_ * o.den_;
    Rational s = d.canonical_scale();
    return RatFunc((num_ * o.den_ + o.num_ * den_) * s, d * s, Normalized{});
  }
  MPoly b1 = den_ / g, d1 = o.den_ / g;
  MPoly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return RatFunc(MPoly(ring()));
  MPoly h = gcd(n, g);
  if (!h.is_constant()) {
    n = n / h;
    g = g / h;
  }
  MPoly d = b1 * d1 * g;
  Rational s = d.canonical_scale();
  return RatFunc(n * s, d * s, Normalized{});
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc(MPoly(common_ring(ring(), o.ring())));
  if (den_.is_constant() && o.den_.is_constant()) return RatFunc(num_ * o.num_, den_, Normalized{});
  MPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_constant()) {
    MPoly g1 = gcd(a, d);
    if (!g1.is_constant()) {
      a = a / g1;
      d = d / g1;
    }
  }
  if (!b.is_constant()) {
    MPoly g2 = gcd(c, b);
    if (!g2.is_constant()) {
      c = c / g2;
      b = b / g2;
    }
  }
  MPoly den = b * d;
  Rational s = den.canonical_scale();
  return RatFunc(a * c * s, den * s, Normalized{});
}

RatFunc RatFunc::operator*(const Rational& c) const {
  if (c == 0) return RatFunc(MPoly(ring()));
  return RatFunc(num_ * c, den_, Normalized{});
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ZeroDenominator();
  Rational s = num_.canonical_scale();
  return RatFunc(den_ * s, num_ * s, Normalized{});
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  auto u = static_cast<unsigned>(e);
  return RatFunc(num_.pow(u), den_.pow(u), Normalized{});
}

RatFunc RatFunc::derivative(Var v) const {
  if (!den_.depends_on(v)) return den_.is_constant() ? RatFunc(num_.derivative(v), den_, Normalized{}) : RatFunc(num_.derivative(v), den_);
  // d(n/D) with D = g*h, g = gcd(D, D'), keeps the denominator small.
  MPoly dd = den_.derivative(v);
  MPoly g = gcd(den_, dd);
  MPoly h = den_ / g;
  MPoly num = num_.derivative(v) * h - num_ * (dd / g);
  return RatFunc(num, den_ * h);
}

RatFunc RatFunc::substitute(Var v, const RatFunc& value) const {
  auto eval = [&](const MPoly& p) -> std::pair<MPoly, unsigned> {
    auto cs = p.coefficients(v);
    const unsigned n = static_cast<unsigned>(cs.size()) - 1;
    MPoly acc(p.ring());
    MPoly apow = MPoly::constant(1);
    for (unsigned k = 0; k <= n; ++k) {
      acc += cs[k] * apow * value.den().pow(n - k);
      apow *= value.num();
    }
    return {acc, n};
  };
  auto [n, dn] = eval(num_);
  auto [d, dd] = eval(den_);
  if (dd > dn) {
    n *= value.den().pow(dd - dn);
  } else if (dn > dd) {
    d *= value.den().pow(dn - dd);
  }
  return RatFunc(n, d);
}

int RatFunc::compare(const RatFunc& a, const RatFunc& b) {
  int c = MPoly::compare(a.num_, b.num_);
  return c ? c : MPoly::compare(a.den_, b.den_);
}

std::string RatFunc::to_string() const {
  Integer q = 1;
  for (const auto& t : num_.terms()) mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), t.coeff.get_den_mpz_t());
  MPoly n = num_ * Rational(q);
  MPoly d = den_ * Rational(q);
  std::string ns = n.to_string();
  if (d.is_one()) return ns;
  if (n.size() > 1) ns = "(" + ns + ")";
  std::string ds = d.to_string();
  bool bare = d.is_constant() || (d.is_monomial() && d.leading_coeff() == 1 && d.leading_mono().pure_power_var() >= 0);
  if (!bare) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

}  // namespace formint
