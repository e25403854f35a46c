#include "formint/fractions.hpp"

#include "formint/algebra.hpp"
#include "formint/errors.hpp"

namespace formint {

RatFunc PartialFractions::recombine() const {
  RatFunc sum = polypart;
  for (const auto& t : terms) sum += t.numerator * RatFunc(MPoly::constant(1), t.denfactor.pow(t.power));
  return sum;
}

PartialFractions partial_fractions(const RatFunc& f, Var var) {
  PartialFractions out;
  const RingPtr ring = f.ring();
  KPoly num = KPoly::from_mpoly(f.num(), var);
  KPoly den = KPoly::from_mpoly(f.den(), var);
  KPoly q(ring, var), r(ring, var);
  num.divmod(den, q, r);
  out.polypart = q.to_ratfunc();
  if (r.is_zero()) return out;

  auto sqf = squarefree_factorization(f.den(), var);
  for (const auto& [factor, mult] : sqf.factors) {
    if (!factor.depends_on(var)) continue;
    KPoly d = KPoly::from_mpoly(factor, var);
    KPoly P(ring, var, {RatFunc::constant(1)});
    for (unsigned i = 0; i < mult; ++i) P = P * d;
    KPoly other = den / P;
    KPoly Ri = ((r % P) * other.inverse_mod(P)) % P;
    for (unsigned j = 0; j < mult && !Ri.is_zero(); ++j) {
      KPoly qq(ring, var), c(ring, var);
      Ri.divmod(d, qq, c);
      if (!c.is_zero()) out.terms.push_back({factor, mult - j, c.to_ratfunc()});
      Ri = qq;
    }
  }
  return out;
}

std::vector<RatFunc> power_sums(const MPoly& R, Var z) {
  KPoly Rk = KPoly::from_mpoly(R, z).monic();
  const int n = Rk.degree();
  std::vector<RatFunc> p(static_cast<std::size_t>(std::max(n, 0)));
  if (n <= 0) return p;
  p[0] = RatFunc::constant(n);
  auto a = [&](int i) { return Rk.coeff(i); };
  for (int k = 1; k < n; ++k) {
    RatFunc s = a(n - k) * Rational(k);
    for (int i = 1; i < k; ++i) s += a(n - i) * p[static_cast<std::size_t>(k - i)];
    p[static_cast<std::size_t>(k)] = -s;
  }
  return p;
}

RatFunc trace_sum(const MPoly& R, const MPoly& num, const MPoly& den, Var z) {
  if (den.is_zero()) throw ZeroDenominator();
  KPoly Rk = KPoly::from_mpoly(R, z);
  if (Rk.degree() < 1) throw PreconditionViolated("trace sum over a constant polynomial");
  KPoly h = KPoly::from_mpoly(num, z) % Rk;
  if (h.is_zero()) return RatFunc(MPoly(common_ring(R.ring(), num.ring())));
  KPoly d = KPoly::from_mpoly(den, z);
  if (d.degree() == 0) {
    h = h * d.lc().inverse();
  } else {
    h = (h * d.inverse_mod(Rk)) % Rk;
  }
  auto p = power_sums(R, z);
  RatFunc sum(MPoly(h.ring()));
  for (int k = 0; k <= h.degree(); ++k) {
    if (!h.coeff(k).is_zero()) sum += h.coeff(k) * p[static_cast<std::size_t>(k)];
  }
  return sum;
}

}  // namespace formint
