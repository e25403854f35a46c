#include "formint/griffiths_dwork.hpp"

#include "formint/algebra.hpp"
#include "formint/errors.hpp"

namespace formint {

RingPtr make_projective_ring(int m) {
  std::vector<std::string> names;
  for (int i = 0; i <= m; ++i) names.push_back("xi" + std::to_string(i));
  return make_ring(names);
}

namespace {

// xi0^deg * p(xi1/xi0, ..., xim/xi0) for p over the first m variables.
MPoly homogenize(const MPoly& p, const RingPtr& proj, int m) {
  const unsigned d = p.total_degree();
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Monomial mono;
    for (int i = 0; i < m; ++i) mono.exp[static_cast<std::size_t>(i + 1)] = t.mono.exp[static_cast<std::size_t>(i)];
    mono.exp[0] = static_cast<std::uint16_t>(d - t.mono.total);
    mono.total = d;
    out.push_back({mono, t.coeff});
  }
  return MPoly(proj, std::move(out));
}

}  // namespace

HomogenizeResult homogenize_m_form(const RatFunc& f, int m) {
  HomogenizeResult res;
  RingPtr proj = make_projective_ring(m);
  res.form.m = m;
  if (f.is_zero()) {
    res.zero = true;
    res.form.P = MPoly(proj);
    res.form.Q = MPoly(proj, Rational(1));
    return res;
  }
  for (Var v = m; f.ring() && v < static_cast<Var>(f.ring()->size()); ++v) {
    if (f.depends_on(v)) throw PreconditionViolated("integrand involves a variable beyond the first " + std::to_string(m));
  }
  MPoly N = homogenize(f.num(), proj, m);
  MPoly D = homogenize(f.den(), proj, m);
  const long e = static_cast<long>(f.den().total_degree()) - static_cast<long>(f.num().total_degree()) - m - 1;
  const MPoly xi0 = MPoly::var(proj, 0);
  if (e > 0) N *= xi0.pow(static_cast<unsigned>(e));
  if (e < 0) D *= xi0.pow(static_cast<unsigned>(-e));
  SqfFactorization s = squarefree_full(D);
  unsigned ell = 0;
  for (const auto& [fac, k] : s.factors) ell = std::max(ell, k);
  MPoly Q(proj, Rational(1));
  MPoly P = N * (1 / s.unit);
  for (const auto& [fac, k] : s.factors) {
    Q *= fac;
    P *= fac.pow(ell - k);
  }
  Rational q = Q.canonical_scale();
  Q = Q * q;
  // Omega/Q^ell scales by q^ell when Q is scaled by q.
  Rational qe = 1;
  for (unsigned i = 0; i < ell; ++i) qe *= q;
  P = P * qe;
  res.form.P = P;
  res.form.Q = Q;
  res.form.ell = ell;
  const bool xi0_divides = Q.divide_exact(xi0).has_value();
  if (xi0_divides && Q != xi0) res.violations.push_back("polar locus contains the hyperplane at infinity xi0 = 0");
  if (s.factors.size() > 1) res.violations.push_back("polar locus has components of different pole orders");
  if (!Q.is_constant() && !is_smooth(Q)) res.violations.push_back("polar locus is not a smooth hypersurface");
  return res;
}

DiffForm omega_form(const RingPtr& ring, int m) {
  const int n = m + 1;
  DiffForm out(ring, n, m);
  const Basis full = (Basis{1} << n) - 1;
  for (int i = 0; i < n; ++i) {
    RatFunc c(MPoly::var(ring, i));
    out.add(full & ~(Basis{1} << i), i % 2 ? -c : c);
  }
  return out;
}

DiffForm phi_form(const GDStage& stage, const MPoly& Q, const RingPtr& ring, int m) {
  const int n = m + 1;
  DiffForm out(ring, n, m - 1);
  if (stage.order < 2) return out;
  const Basis full = (Basis{1} << n) - 1;
  const RatFunc scale = RatFunc(MPoly::constant(Rational(1, static_cast<long>(stage.order - 1)))) /
                        RatFunc(Q.pow(stage.order - 1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      MPoly c = MPoly::var(ring, i) * stage.A[static_cast<std::size_t>(j)] -
                MPoly::var(ring, j) * stage.A[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      // sign making d(phi) match the pole-order reduction identity
      RatFunc coef = RatFunc(c) * scale;
      out.add(full & ~(Basis{1} << i) & ~(Basis{1} << j), (i + j) % 2 ? -coef : coef);
    }
  }
  return out;
}

DiffForm gd_reconstruct(const GDResult& r, const MPoly& Q, const RingPtr& ring, int m) {
  const DiffForm Om = omega_form(ring, m);
  DiffForm out(ring, m + 1, m);
  for (const auto& st : r.phis) {
    if (st.order > 1) out = out + exterior_derivative(phi_form(st, Q, ring, m));
  }
  for (std::size_t k = 0; k < r.remainders.size(); ++k) {
    if (r.remainders[k].is_zero()) continue;
    out = out + Om * RatFunc(r.remainders[k], Q.pow(r.phis[k].order));
  }
  return out;
}

GDResult gd_reduce(const ProjForm& w, bool early_exit) {
  const MPoly& Q = w.Q;
  if (!is_homogeneous(Q) || !is_homogeneous(w.P)) throw NotHomogeneous();
  if (Q.is_constant()) throw PreconditionViolated("Q must be nonconstant");
  const int m = w.m;
  RingPtr ring = Q.ring();
  if (!ring || static_cast<int>(ring->size()) != m + 1) throw PreconditionViolated("Q must live in m+1 homogeneous variables");
  if (w.ell < 1) throw PreconditionViolated("pole order must be positive");
  GDResult res;
  if (w.P.is_zero()) {
    res.exact = true;
    return res;
  }
  if (w.ell * Q.total_degree() != w.P.total_degree() + static_cast<unsigned>(m) + 1) throw DegreeMismatch("ell * deg Q must equal deg P + m + 1");
  const auto J = jacobian(Q, m + 1);
  GBasis G = groebner_basis(J);
  bool smooth = true;
  {
    std::vector<bool> seen(static_cast<std::size_t>(m + 1), false);
    for (const auto& g : G.gens) {
      Var v = g.leading_mono().pure_power_var();
      if (g.leading_mono().is_one()) seen.assign(seen.size(), true);
      if (v >= 0) seen[static_cast<std::size_t>(v)] = true;
    }
    for (bool b : seen) smooth = smooth && b;
  }
  if (!smooth) throw NotSmooth();
  MPoly P = w.P.with_ring(ring);
  res.exact = true;
  for (unsigned o = w.ell; o >= 1; --o) {
    NormalForm nf = normal_form(P, G);
    res.phis.push_back({o, nf.quotients});
    res.remainders.push_back(nf.remainder);
    if (!nf.remainder.is_zero()) {
      res.exact = false;
      if (early_exit) return res;
    }
    if (o == 1) break;
    MPoly next(ring);
    for (int i = 0; i <= m; ++i) next += nf.quotients[static_cast<std::size_t>(i)].derivative(i);
    P = next * Rational(1, static_cast<long>(o - 1));
  }
  const DiffForm lhs = omega_form(ring, m) * RatFunc(w.P.with_ring(ring), Q.pow(w.ell));
  if (gd_reconstruct(res, Q, ring, m) != lhs) throw InternalAssertion("Griffiths-Dwork reconstruction identity failed");
  res.reconstruction_checked = true;
  return res;
}

bool verify_picard_solution(const RatFunc& f, const std::vector<RatFunc>& u) {
  RatFunc s;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i].derivative(static_cast<Var>(i));
  return s == f;
}

}  // namespace formint
