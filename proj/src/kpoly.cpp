#include "formint/kpoly.hpp"

#include "formint/algebra.hpp"
#include "formint/errors.hpp"

namespace formint {

MPoly lcm(const MPoly& a, const MPoly& b) {
  if (a.is_constant()) return b.canonical();
  if (b.is_constant()) return a.canonical();
  MPoly g = gcd(a, b);
  return ((a / g) * b).canonical();
}

KPoly::KPoly(RingPtr ring, Var var, std::vector<RatFunc> coeffs) : ring_(std::move(ring)), var_(var), c_(std::move(coeffs)) {
  trim();
}

void KPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

KPoly KPoly::from_mpoly(const MPoly& p, Var var) {
  std::vector<RatFunc> cs;
  for (auto& c : p.coefficients(var)) cs.emplace_back(c);
  if (p.is_zero()) cs.clear();
  return KPoly(p.ring(), var, std::move(cs));
}

KPoly KPoly::from_ratfunc(const RatFunc& f, Var var) {
  if (f.den().depends_on(var)) throw PreconditionViolated("rational function is not polynomial in the variable");
  KPoly k = from_mpoly(f.num(), var);
  if (!f.den().is_one()) {
    RatFunc inv = RatFunc(f.den()).inverse();
    for (auto& c : k.c_) c = c * inv;
  }
  if (!k.ring_) k.ring_ = f.ring();
  return k;
}

MPoly KPoly::numerator_over(const MPoly& common_den) const {
  std::vector<MPoly> cs;
  cs.reserve(c_.size());
  for (const auto& c : c_) cs.push_back(c.num() * (common_den / c.den()));
  return MPoly::from_coefficients(ring_, var_, cs);
}

MPoly KPoly::to_mpoly_scaled() const {
  MPoly L = MPoly::constant(1).with_ring(ring_);
  for (const auto& c : c_) L = lcm(L, c.den());
  return numerator_over(L);
}

RatFunc KPoly::to_ratfunc() const {
  if (c_.empty()) return RatFunc(MPoly(ring_));
  MPoly L = MPoly::constant(1).with_ring(ring_);
  for (const auto& c : c_) L = lcm(L, c.den());
  return RatFunc(numerator_over(L), L);
}

RatFunc KPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return RatFunc(MPoly(ring_));
  return c_[static_cast<std::size_t>(k)];
}

KPoly KPoly::operator+(const KPoly& o) const {
  std::vector<RatFunc> r(std::max(c_.size(), o.c_.size()), RatFunc(MPoly(ring_)));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return KPoly(ring_ ? ring_ : o.ring_, var_, std::move(r));
}

KPoly KPoly::operator-() const {
  KPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

KPoly KPoly::operator-(const KPoly& o) const { return *this + (-o); }

KPoly KPoly::operator*(const KPoly& o) const {
  if (c_.empty() || o.c_.empty()) return KPoly(ring_, var_);
  std::vector<RatFunc> r(c_.size() + o.c_.size() - 1, RatFunc(MPoly(ring_)));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
    }
  }
  return KPoly(ring_ ? ring_ : o.ring_, var_, std::move(r));
}

KPoly KPoly::operator*(const RatFunc& c) const {
  if (c.is_zero()) return KPoly(ring_, var_);
  KPoly r = *this;
  for (auto& x : r.c_) x = x * c;
  r.trim();
  return r;
}

void KPoly::divmod(const KPoly& d, KPoly& q, KPoly& r) const {
  if (d.is_zero()) throw ZeroDenominator();
  r = *this;
  const int dd = d.degree();
  std::vector<RatFunc> qc(static_cast<std::size_t>(std::max(0, degree() - dd + 1)), RatFunc(MPoly(ring_)));
  RatFunc inv = d.lc().inverse();
  while (!r.is_zero() && r.degree() >= dd) {
    const int shift = r.degree() - dd;
    RatFunc f = r.lc() * inv;
    qc[static_cast<std::size_t>(shift)] = f;
    for (int i = 0; i <= dd; ++i) {
      auto idx = static_cast<std::size_t>(i + shift);
      r.c_[idx] -= f * d.c_[static_cast<std::size_t>(i)];
    }
    r.c_.back() = RatFunc(MPoly(ring_));  // exact cancellation of the leading term
    r.trim();
  }
  q = KPoly(ring_, var_, std::move(qc));
}

KPoly KPoly::operator%(const KPoly& d) const {
  if (degree() < d.degree()) return *this;
  KPoly q(ring_, var_), r(ring_, var_);
  divmod(d, q, r);
  return r;
}

KPoly KPoly::operator/(const KPoly& d) const {
  KPoly q(ring_, var_), r(ring_, var_);
  divmod(d, q, r);
  return q;
}

KPoly KPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lc().inverse();
}

KPoly KPoly::derivative() const {
  if (c_.size() <= 1) return KPoly(ring_, var_);
  std::vector<RatFunc> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Rational(static_cast<long>(i)));
  return KPoly(ring_, var_, std::move(r));
}

KPoly KPoly::gcd(const KPoly& a, const KPoly& b) {
  KPoly x = a, y = b;
  while (!y.is_zero()) {
    KPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

KPoly KPoly::ext_gcd(const KPoly& a, const KPoly& b, KPoly& s, KPoly& t) {
  RingPtr ring = a.ring_ ? a.ring_ : b.ring_;
  const Var v = a.var_;
  KPoly r0 = a, r1 = b;
  KPoly s0(ring, v, {RatFunc::constant(1)}), s1(ring, v);
  KPoly t0(ring, v), t1(ring, v, {RatFunc::constant(1)});
  while (!r1.is_zero()) {
    KPoly q(ring, v), r(ring, v);
    r0.divmod(r1, q, r);
    KPoly s2 = s0 - q * s1;
    KPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  RatFunc inv = r0.lc().inverse();
  s = s0 * inv;
  t = t0 * inv;
  return r0 * inv;
}

namespace {

// Fraction-free (Bareiss) solve of N y = det(N) * rhs; returns det(N) and
// the polynomial numerators y, or a zero determinant if N is singular.
MPoly bareiss_solve(std::vector<std::vector<MPoly>> M, const std::vector<MPoly>& rhs, std::vector<MPoly>& y) {
  const std::size_t n = M.size();
  for (std::size_t i = 0; i < n; ++i) M[i].push_back(rhs[i]);
  MPoly prev = MPoly::constant(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && M[p][k].is_zero()) ++p;
      if (p == n) return MPoly();
      std::swap(M[p], M[k]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
      M[i][k] = MPoly();
    }
    prev = M[k][k];
  }
  const MPoly det = M[n - 1][n - 1];
  y.assign(n, MPoly());
  for (std::size_t j = n; j-- > 0;) {
    MPoly acc = det * M[j][n];
    for (std::size_t k = j + 1; k < n; ++k) acc -= M[j][k] * y[k];
    y[j] = acc / M[j][j];
  }
  return det;
}

}  // namespace

// Solves s*a = 1 mod m as a linear system over the polynomial coefficient
// ring; extended Euclid over the rational function field is much slower.
KPoly KPoly::inverse_mod(const KPoly& m) const {
  KPoly a = *this % m;
  if (a.is_zero()) throw NonInvertibleDenominator();
  const int n = m.degree();
  if (n <= 0) throw NonInvertibleDenominator();
  if (a.degree() == 0) return KPoly(ring_, var_, {a.lc().inverse()});
  // column j holds the coefficients of v^j * a mod m
  std::vector<KPoly> cols{a};
  const KPoly v(ring_, var_, {RatFunc(MPoly(ring_)), RatFunc::constant(1)});
  for (int j = 1; j < n; ++j) cols.push_back((cols.back() * v) % m);
  MPoly L = MPoly::constant(1);
  for (const auto& c : cols) {
    for (const auto& e : c.coeffs()) {
      if (!e.is_zero()) L = formint::lcm(L, e.den());
    }
  }
  std::vector<std::vector<MPoly>> N(static_cast<std::size_t>(n), std::vector<MPoly>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const RatFunc e = cols[static_cast<std::size_t>(j)].coeff(i);
      if (!e.is_zero()) N[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e.num() * (L / e.den());
    }
  }
  std::vector<MPoly> rhs(static_cast<std::size_t>(n), MPoly());
  rhs[0] = L;
  std::vector<MPoly> y;
  const MPoly det = bareiss_solve(std::move(N), rhs, y);
  if (det.is_zero()) throw NonInvertibleDenominator();
  std::vector<RatFunc> s;
  for (const auto& yj : y) s.push_back(yj.is_zero() ? RatFunc(MPoly(ring_)) : RatFunc(yj, det));
  return KPoly(ring_, var_, std::move(s));
}

}  // namespace formint
