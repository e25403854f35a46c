#include "formint/oneform.hpp"

#include "formint/errors.hpp"

namespace formint {

namespace {

struct Stage {
  RatFunc a;
  std::vector<LogTerm> logs;
};

// One elimination step on the coefficient of dx_k; updates w in place.
Stage eliminate(DiffForm& w, int k) {
  const RingPtr& ring = w.ring();
  const int m = w.nvars();
  const Basis bk = Basis{1} << k;
  RatFunc fk = w.coeff(bk);
  Stage st;
  if (fk.is_zero()) return st;
  HermiteResult hr = hermite_rat(fk.num(), fk.den(), k);
  st.a = hr.g;
  st.logs = log_part(hr.h, k, ArgNormalization::Primitive);
  for (const auto& t : st.logs) {
    for (int v = 0; v < m; ++v) {
      if (t.respoly.depends_on(v)) {
        throw RationalityAssertionFailed("log residues of " + fk.to_string() + " depend on " + ring->name(v));
      }
    }
  }
  DiffForm sub(ring, m, 1);
  for (int l = 0; l <= k; ++l) {
    RatFunc c = st.a.derivative(l);
    if (l == k) {
      c += hr.h;
    } else {
      for (const auto& t : st.logs) c += log_derivative(t, l);
    }
    sub.add(Basis{1} << l, c);
  }
  w = w - sub;
  if (!w.free_of(k)) throw InternalAssertion("1-form elimination left a dependence on " + ring->name(k));
  return st;
}

}  // namespace

HermiteOneFormResult hermite_one_form(const DiffForm& w) {
  if (w.degree() != 1) throw PreconditionViolated("expected a 1-form");
  require_closed(w);
  HermiteOneFormResult out{RatFunc(MPoly(w.ring())), DiffForm(w.ring(), w.nvars(), 1)};
  DiffForm cur = w;
  for (int k = w.nvars() - 1; k >= 0; --k) {
    DiffForm before = cur;
    Stage st = eliminate(cur, k);
    out.g += st.a;
    // what was removed beyond d(a) is the logarithmic part r_k
    DiffForm removed = before - cur;
    DiffForm da = exterior_derivative(DiffForm::scalar(w.ring(), w.nvars(), st.a));
    out.tilde = out.tilde + (removed - da);
  }
  if (!cur.is_zero()) throw InternalAssertion("1-form elimination did not terminate at zero");
  return out;
}

Primitive integrate_closed_1form(const DiffForm& w) {
  if (w.degree() != 1) throw PreconditionViolated("expected a 1-form");
  require_closed(w);
  Primitive P{RatFunc(MPoly(w.ring())), {}};
  DiffForm cur = w;
  for (int k = w.nvars() - 1; k >= 0; --k) {
    Stage st = eliminate(cur, k);
    P.rational += st.a;
    P.logs.insert(P.logs.end(), st.logs.begin(), st.logs.end());
  }
  if (!cur.is_zero()) throw InternalAssertion("1-form elimination did not terminate at zero");
  sort_logs(P.logs);
  return P;
}

bool is_exact_rational(const DiffForm& w) { return hermite_one_form(w).tilde.is_zero(); }

DiffForm primitive_differential(const Primitive& P, const RingPtr& ring, int nvars) {
  DiffForm out(ring, nvars, 1);
  for (int l = 0; l < nvars; ++l) {
    for (const auto& t : P.logs) {
      if (log_residue_moves(t, l)) throw ResidualLogarithm();
    }
    out.add(Basis{1} << l, primitive_derivative(P, l));
  }
  return out;
}

}  // namespace formint
