#include "formint/pform.hpp"

#include "formint/errors.hpp"
#include "formint/oneform.hpp"

namespace formint {

void PrimitiveForm::add(Basis b, const Primitive& p) {
  auto it = coeffs.find(b);
  if (it == coeffs.end()) {
    if (!p.rational.is_zero() || !p.logs.empty()) coeffs.emplace(b, p);
    return;
  }
  it->second.rational += p.rational;
  it->second.logs.insert(it->second.logs.end(), p.logs.begin(), p.logs.end());
  sort_logs(it->second.logs);
  if (it->second.rational.is_zero() && it->second.logs.empty()) coeffs.erase(it);
}

DiffForm expand_primitive_derivative(const PrimitiveForm& P) {
  DiffForm out(P.ring, P.nvars, P.degree + 1);
  // per target basis and log variable: d/d(var) of the log sum, which must vanish
  std::map<std::pair<Basis, Var>, RatFunc> probes;
  for (const auto& [J, prim] : P.coeffs) {
    for (int l = 0; l < P.nvars; ++l) {
      const Basis bl = Basis{1} << l;
      if (J & bl) continue;
      const int sign = wedge_sign(bl, J);
      RatFunc c = primitive_derivative(prim, l);
      if (!c.is_zero()) out.add(J | bl, sign > 0 ? c : -c);
      for (const auto& t : prim.logs) {
        if (!log_residue_moves(t, l)) continue;
        RatFunc pr = log_residue_probe(t, l);
        auto& slot = probes[{J | bl, t.var}];
        slot += sign > 0 ? pr : -pr;
      }
    }
  }
  for (const auto& [key, v] : probes) {
    if (!v.is_zero()) throw ResidualLogarithm();
  }
  return out;
}

PrimitiveForm integrate_closed_pform(const DiffForm& w) {
  const int p = w.degree();
  const int m = w.nvars();
  if (p < 1) throw PreconditionViolated("integrate_closed_pform needs a form of degree at least 1");
  require_closed(w);
  PrimitiveForm out{w.ring(), m, p - 1, {}};
  if (p == 1) {
    Primitive g = integrate_closed_1form(w);
    out.add(0, g);
    return out;
  }
  DiffForm cur = w;
  for (int k = m - 1; k >= p - 1 && !cur.is_zero(); --k) {
    DiffForm A = top_factor_leading(cur.with_nvars(k + 1)).with_nvars(m);
    PrimitiveForm stage{w.ring(), m, p - 1, {}};
    for (const auto& [I, a] : A.terms()) stage.add(I, integrate_univariate(a, k, ArgNormalization::Monic));
    DiffForm dpsi;
    try {
      dpsi = expand_primitive_derivative(stage);
    } catch (const ResidualLogarithm&) {
      throw RationalityAssertionFailed("logarithms survive the elimination of " + w.ring()->name(k));
    }
    cur = cur - dpsi;
    if (!cur.free_of(k)) {
      throw RationalityAssertionFailed("elimination of " + w.ring()->name(k) + " left a dependence on it");
    }
    for (const auto& [I, prim] : stage.coeffs) out.add(I, prim);
  }
  if (!cur.is_zero()) throw InternalAssertion("p-form elimination did not terminate at zero");
  return out;
}

}  // namespace formint
