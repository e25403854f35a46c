#include "formint/univariate.hpp"

#include <algorithm>

#include "formint/algebra.hpp"
#include "formint/errors.hpp"
#include "formint/fractions.hpp"
#include "formint/kpoly.hpp"

namespace formint {

namespace {

// B*a + C*b = c with deg B < deg b, assuming gcd(a, b) = 1.
void solve_bezout(const KPoly& a, const KPoly& b, const KPoly& c, KPoly& B, KPoly& C) {
  KPoly s(a.ring(), a.var()), t(a.ring(), a.var());
  KPoly g = KPoly::ext_gcd(a, b, s, t);
  if (g.degree() != 0) throw InternalAssertion("Hermite reduction met non-coprime factors");
  B = (s * c) % b;
  C = (c - B * a) / b;
}

KPoly kpow(const KPoly& p, unsigned e) {
  KPoly r(p.ring(), p.var(), {RatFunc::constant(1)});
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

RatFunc integrate_polynomial(const KPoly& q, Var var) {
  std::vector<RatFunc> cs(static_cast<std::size_t>(q.degree() + 2), RatFunc(MPoly(q.ring())));
  for (int k = 0; k <= q.degree(); ++k) cs[static_cast<std::size_t>(k + 1)] = q.coeff(k) * Rational(1, k + 1);
  return KPoly(q.ring(), var, std::move(cs)).to_ratfunc();
}

}  // namespace

HermiteResult hermite_rat(const MPoly& A, const MPoly& D, Var var) {
  if (D.is_zero()) throw ZeroDenominator();
  RingPtr ring = common_ring(A.ring(), D.ring());
  if (!A.is_zero() && gcd(A, D).depends_on(var)) throw NotCoprime();
  KPoly a = KPoly::from_mpoly(A.with_ring(ring), var);
  KPoly d = KPoly::from_mpoly(D.with_ring(ring), var);
  KPoly q(ring, var), r(ring, var);
  a.divmod(d, q, r);
  RatFunc g = integrate_polynomial(q, var);
  if (r.is_zero()) return {g, RatFunc(MPoly(ring))};

  auto sqf = squarefree_factorization(D, var);
  std::vector<std::pair<MPoly, unsigned>> factors;
  for (const auto& f : sqf.factors) {
    if (f.first.depends_on(var)) factors.push_back(f);
  }
  std::sort(factors.begin(), factors.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  KPoly num = r;
  KPoly den = d;
  for (const auto& [factor, mult] : factors) {
    if (mult < 2) continue;
    KPoly V = KPoly::from_mpoly(factor, var);
    KPoly U = den / kpow(V, mult);
    KPoly UdV = U * V.derivative();
    for (unsigned j = mult - 1; j >= 1; --j) {
      KPoly B(ring, var), C(ring, var);
      solve_bezout(UdV, V, num * RatFunc::constant(Rational(-1, static_cast<long>(j))), B, C);
      g += B.to_ratfunc() / kpow(V, j).to_ratfunc();
      num = C * RatFunc::constant(-static_cast<long>(j)) - U * B.derivative();
    }
    den = U * V;
  }
  return {g, num.to_ratfunc() / den.to_ratfunc()};
}

namespace {

MPoly coefficient_content(const MPoly& p, Var a, Var b) {
  MPoly c(p.ring());
  for (const auto& ca : p.coefficients(a)) {
    for (const auto& cb : ca.coefficients(b)) {
      if (cb.is_zero()) continue;
      c = c.is_zero() ? cb.canonical() : gcd(c, cb);
      if (c.is_one()) return c;
    }
  }
  return c;
}

}  // namespace

std::vector<LogTerm> log_part(const RatFunc& h, Var var, ArgNormalization norm) {
  std::vector<LogTerm> out;
  if (h.is_zero()) return out;
  RingPtr ring = h.ring();
  if (!ring || ring->root() < 0) throw PreconditionViolated("ring has no root variable for logarithmic terms");
  const Var z = ring->root();
  if (h.depends_on(z)) throw PreconditionViolated("integrand involves the root variable");
  const MPoly& A = h.num();
  const MPoly& D = h.den();
  const unsigned n = D.degree(var);
  if (A.degree(var) >= n) throw PreconditionViolated("log_part needs a proper fraction in the variable");
  if (gcd(D, D.derivative(var)).depends_on(var)) throw PreconditionViolated("log_part needs a squarefree denominator");

  const MPoly zvar = MPoly::var(ring, z);
  const MPoly B = A - zvar * D.derivative(var);
  const MPoly R = resultant(D, B, var);
  auto sqf = squarefree_factorization(R, z);
  for (const auto& [factor, i] : sqf.factors) {
    if (!factor.depends_on(z)) continue;
    MPoly Ri = primitive_part(factor, z).canonical();
    MPoly S;
    if (i == n) {
      S = D;
    } else {
      if (B.degree(var) < i) throw InternalAssertion("residue multiplicity exceeds remainder degree");
      S = subresultant(D, B, var, i);
    }
    for (const auto& [aj, j] : squarefree_factorization(S.leading_coefficient(var), z).factors) {
      if (!aj.depends_on(z)) continue;
      MPoly gg = gcd(aj, Ri);
      if (gg.depends_on(z)) S = S / gg.pow(j);
    }
    KPoly Rk = KPoly::from_mpoly(Ri, z);
    // content free of var and z does not change the monic argument
    if (norm == ArgNormalization::Monic) {
      MPoly cont = coefficient_content(S, var, z);
      if (!cont.is_constant()) S = S / cont;
    }
    std::vector<KPoly> coeffs;
    for (const auto& s : S.coefficients(var)) coeffs.push_back(KPoly::from_mpoly(s, z) % Rk);
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.size() < 2) throw InternalAssertion("logarithm argument lost its degree modulo the residue polynomial");
    if (norm == ArgNormalization::Monic) {
      KPoly inv = coeffs.back().inverse_mod(Rk);
      for (auto& c : coeffs) c = (c * inv) % Rk;
    }
    MPoly L = MPoly::constant(1).with_ring(ring);
    for (const auto& c : coeffs) {
      for (const auto& e : c.coeffs()) L = lcm(L, e.den());
    }
    std::vector<MPoly> polys;
    for (auto& c : coeffs) polys.push_back(c.is_zero() ? MPoly(ring) : c.numerator_over(L));
    MPoly num = MPoly::from_coefficients(ring, var, polys);
    RatFunc arg;
    if (norm == ArgNormalization::Monic) {
      arg = RatFunc(num, L);
    } else {
      MPoly c = coefficient_content(num, var, z);
      arg = RatFunc((num / c).canonical());
    }
    out.push_back({Ri, arg, var});
  }
  sort_logs(out);
  return out;
}

Primitive integrate_univariate(const RatFunc& f, Var var, ArgNormalization norm) {
  HermiteResult hr = hermite_rat(f.num(), f.den(), var);
  return {hr.g, log_part(hr.h, var, norm)};
}

void sort_logs(std::vector<LogTerm>& logs) {
  std::sort(logs.begin(), logs.end(), [](const LogTerm& a, const LogTerm& b) {
    if (a.var != b.var) return a.var > b.var;
    int c = MPoly::compare(a.respoly, b.respoly);
    if (c) return c < 0;
    return RatFunc::compare(a.argpoly, b.argpoly) < 0;
  });
}

bool log_residue_moves(const LogTerm& t, Var l) { return t.respoly.depends_on(l); }

RatFunc log_derivative(const LogTerm& t, Var l) {
  const RingPtr ring = t.argpoly.ring() ? t.argpoly.ring() : t.respoly.ring();
  const Var z = ring->root();
  const MPoly& R = t.respoly;
  const MPoly& N = t.argpoly.num();
  const MPoly& Dn = t.argpoly.den();
  const MPoly zv = MPoly::var(ring, z);
  const bool moves = R.depends_on(l);
  MPoly dlog = N.derivative(l) * Dn - N * Dn.derivative(l);
  if (!moves) {
    if (dlog.is_zero()) return RatFunc(MPoly(ring));
    return trace_sum(R, zv * dlog, N * Dn, z);
  }
  MPoly Rz = R.derivative(z);
  MPoly num = zv * (dlog * Rz - N.derivative(z) * Dn * R.derivative(l));
  return trace_sum(R, num, N * Dn * Rz, z);
}

RatFunc log_residue_probe(const LogTerm& t, Var l) {
  const RingPtr ring = t.argpoly.ring() ? t.argpoly.ring() : t.respoly.ring();
  if (!t.respoly.depends_on(l)) return RatFunc(MPoly(ring));
  const Var z = ring->root();
  const MPoly& N = t.argpoly.num();
  return trace_sum(t.respoly, -t.respoly.derivative(l) * N.derivative(t.var), t.respoly.derivative(z) * N, z);
}

RatFunc primitive_derivative(const Primitive& p, Var l) {
  RatFunc r = p.rational.derivative(l);
  for (const auto& t : p.logs) r += log_derivative(t, l);
  return r;
}

}  // namespace formint
