#include "formint/telescoping.hpp"

#include <map>

#include "formint/algebra.hpp"
#include "formint/errors.hpp"
#include "formint/kpoly.hpp"
#include "formint/oneform.hpp"
#include "formint/univariate.hpp"

namespace formint {

namespace {

void trim_ops(std::vector<RatFunc>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Var param_of(const RingPtr& ring) {
  if (!ring || ring->param() < 0) throw PreconditionViolated("ring has no parameter t");
  return ring->param();
}

}  // namespace

OreOp::OreOp(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim_ops(c_); }

OreOp OreOp::identity() { return OreOp({RatFunc::constant(1)}); }

OreOp OreOp::dt() { return OreOp({RatFunc(), RatFunc::constant(1)}); }

RatFunc OreOp::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return RatFunc();
  return c_[static_cast<std::size_t>(i)];
}

std::string OreOp::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = order(); i >= 0; --i) {
    const RatFunc& a = c_[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    std::string s = a.to_string();
    bool compound = !(a.num().is_monomial() && a.den().is_one());
    std::string term;
    if (i == 0) {
      term = compound ? "(" + s + ")" : s;
    } else {
      std::string dt = i == 1 ? "Dt" : "Dt^" + std::to_string(i);
      if (a.is_constant() && a.constant_value() == 1) {
        term = dt;
      } else if (a.is_constant() && a.constant_value() == -1) {
        term = "-" + dt;
      } else {
        term = (compound ? "(" + s + ")" : s) + "*" + dt;
      }
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

OreOp ore_multiply(const OreOp& a, const OreOp& b, Var t) {
  if (a.is_zero() || b.is_zero()) return OreOp();
  // Dt^i * c = sum_k binom(i,k) c^(k) Dt^(i-k)
  std::vector<RatFunc> out(static_cast<std::size_t>(a.order() + b.order() + 1));
  for (int i = 0; i <= a.order(); ++i) {
    const RatFunc& ai = a.coeffs()[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = 0; j <= b.order(); ++j) {
      RatFunc c = b.coeffs()[static_cast<std::size_t>(j)];
      Integer binom = 1;
      for (int k = 0; k <= i && !c.is_zero(); ++k) {
        out[static_cast<std::size_t>(i - k + j)] += ai * c * Rational(binom);
        binom = binom * (i - k) / (k + 1);
        c = c.derivative(t);
      }
    }
  }
  return OreOp(std::move(out));
}

RatFunc ore_apply(const OreOp& L, const RatFunc& f, Var t) {
  RatFunc out, d = f;
  for (int i = 0; i <= L.order(); ++i) {
    if (i > 0) d = d.derivative(t);
    const RatFunc& a = L.coeffs()[static_cast<std::size_t>(i)];
    if (!a.is_zero()) out += a * d;
  }
  return out;
}

DiffForm ore_apply(const OreOp& L, const DiffForm& w, Var t) {
  DiffForm out(w.ring(), w.nvars(), w.degree());
  for (const auto& [b, f] : w.terms()) out.add(b, ore_apply(L, f, t));
  return out;
}

namespace {

OreOp normalize_impl(const OreOp& L, Var t, RatFunc* lambda, bool polynomial_content) {
  if (L.is_zero()) {
    if (lambda) *lambda = RatFunc::constant(1);
    return L;
  }
  MPoly den = MPoly::constant(1);
  for (const auto& a : L.coeffs()) {
    if (!a.is_zero()) den = lcm(den, a.den());
  }
  std::vector<MPoly> polys;
  for (const auto& a : L.coeffs()) polys.push_back(a.is_zero() ? MPoly() : a.num() * (den / a.den()));
  MPoly content;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    content = content.is_zero() ? p.canonical() : (polynomial_content ? gcd(content, p) : content);
  }
  if (!polynomial_content) content = MPoly::constant(1);
  // rational content and sign from the leading operator coefficient
  std::vector<MPoly> reduced;
  for (const auto& p : polys) reduced.push_back(p.is_zero() ? p : p / content);
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& p : reduced) {
    for (const auto& tm : p.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), tm.coeff.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), tm.coeff.get_den_mpz_t());
    }
  }
  Rational s(den_lcm, num_gcd);
  s.canonicalize();
  if (reduced.back().leading_coeff() < 0) s = -s;
  std::vector<RatFunc> out;
  for (const auto& p : reduced) out.emplace_back(p * s);
  if (lambda) *lambda = RatFunc(MPoly::constant(s)) / RatFunc(content * 1, den);
  (void)t;
  return OreOp(std::move(out));
}

}  // namespace

OreOp normalize_operator(const OreOp& L, Var t, RatFunc* lambda) { return normalize_impl(L, t, lambda, true); }

OreOp normalize_operator_numeric(const OreOp& L, Var t, RatFunc* lambda) { return normalize_impl(L, t, lambda, false); }

namespace {

// Column vectors of rational functions; each column is a list of components.
// Rows are (component, monomial in the non-t variables) after clearing
// denominators per component, so entries are polynomials in t.
std::vector<std::vector<RatFunc>> coefficient_rows(const std::vector<std::vector<RatFunc>>& cols, Var t) {
  const std::size_t ncomp = cols.empty() ? 0 : cols[0].size();
  std::vector<std::vector<RatFunc>> rows;
  for (std::size_t c = 0; c < ncomp; ++c) {
    MPoly D = MPoly::constant(1);
    for (const auto& col : cols) {
      if (!col[c].is_zero()) D = lcm(D, col[c].den());
    }
    std::map<std::vector<unsigned>, std::vector<MPoly>> split;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const RatFunc& f = cols[j][c];
      if (f.is_zero()) continue;
      MPoly N = f.num() * (D / f.den());
      for (const auto& tm : N.terms()) {
        std::vector<unsigned> key(tm.mono.exp.begin(), tm.mono.exp.end());
        key[static_cast<std::size_t>(t)] = 0;
        auto& row = split[key];
        if (row.empty()) row.assign(cols.size(), MPoly());
        Monomial tpart = Monomial::var(t, tm.mono[t]);
        row[j] += MPoly::monomial(N.ring(), tpart, tm.coeff);
      }
    }
    for (auto& [key, row] : split) {
      std::vector<RatFunc> r;
      for (auto& p : row) r.emplace_back(p);
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(std::vector<std::vector<RatFunc>>& M, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < M.size(); ++c) {
    std::size_t p = r;
    while (p < M.size() && M[p][c].is_zero()) ++p;
    if (p == M.size()) continue;
    std::swap(M[p], M[r]);
    RatFunc inv = M[r][c].inverse();
    for (std::size_t k = c; k < M[r].size(); ++k) M[r][k] *= inv;
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      RatFunc f = M[i][c];
      for (std::size_t k = c; k < M[i].size(); ++k) M[i][k] -= f * M[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Coefficients a_0..a_n with a_n = 1 and sum a_j col_j = 0, if the last
// column depends on the others (which are assumed independent).
std::optional<std::vector<RatFunc>> last_dependence(const std::vector<std::vector<RatFunc>>& cols, Var t) {
  auto M = coefficient_rows(cols, t);
  const std::size_t n = cols.size();
  auto pivots = echelon(M, n);
  if (!pivots.empty() && pivots.back() == n - 1) return std::nullopt;
  std::vector<RatFunc> a(n);
  a[n - 1] = RatFunc::constant(1);
  for (std::size_t r = 0; r < pivots.size(); ++r) a[pivots[r]] = -M[r][n - 1];
  return a;
}

std::size_t rank_of(const std::vector<std::vector<RatFunc>>& cols, Var t) {
  auto M = coefficient_rows(cols, t);
  return echelon(M, cols.size()).size();
}

constexpr int kMaxOrder = 64;

}  // namespace

Telescoped min_telescoper_bivariate(const RatFunc& f, Var x) {
  const RingPtr ring = f.ring();
  if (f.is_zero()) return {OreOp::identity(), RatFunc()};
  const Var t = param_of(ring);
  std::vector<RatFunc> gs;
  std::vector<std::vector<RatFunc>> cols;
  RatFunc d = f;
  for (int i = 0; i <= kMaxOrder; ++i) {
    if (i > 0) d = d.derivative(t);
    HermiteResult hr = hermite_rat(d.num(), d.den(), x);
    gs.push_back(hr.g);
    cols.push_back({hr.h});
    auto dep = last_dependence(cols, t);
    if (!dep) continue;
    RatFunc lambda;
    OreOp L = normalize_operator(OreOp(*dep), t, &lambda);
    RatFunc g;
    for (std::size_t j = 0; j < gs.size(); ++j) g += L.coeff(static_cast<int>(j)) * gs[j];
    return {L, g};
  }
  throw InternalAssertion("no telescoper found below the order bound");
}

namespace {

Telescoped ct_rec(const DiffForm& w) {
  const int m = w.nvars();
  const Var t = param_of(w.ring());
  if (w.is_zero() || m == 0) return {OreOp::identity(), RatFunc()};
  HermiteOneFormResult H = hermite_one_form(w);
  const RatFunc fm = H.tilde.coeff(Basis{1} << (m - 1));
  Telescoped top = fm.is_zero() ? Telescoped{OreOp::identity(), RatFunc()} : min_telescoper_bivariate(fm, m - 1);
  const OreOp& Lm = top.L;
  const RatFunc& gm = top.certificate;
  if (m == 1) return {Lm, ore_apply(Lm, H.g, t) + gm};
  DiffForm wbar = ore_apply(Lm, H.tilde, t) - exterior_derivative(DiffForm::scalar(w.ring(), m, gm));
  if (!wbar.free_of(m - 1)) throw InternalAssertion("telescoped form still involves " + w.ring()->name(m - 1));
  HermiteOneFormResult Hb = hermite_one_form(wbar.with_nvars(m - 1));
  Telescoped rest = ct_rec(Hb.tilde);
  const OreOp& Lbar = rest.L;
  OreOp L = ore_multiply(Lbar, Lm, t);
  RatFunc g = rest.certificate + ore_apply(Lbar, Hb.g, t) + ore_apply(Lbar, gm, t) +
              ore_apply(Lbar, ore_apply(Lm, H.g, t), t);
  return {L, g};
}

}  // namespace

Telescoped ct_one_form(const DiffForm& w) {
  if (w.degree() != 1) throw PreconditionViolated("expected a 1-form");
  require_closed(w);
  const Var t = param_of(w.ring());
  Telescoped r = ct_rec(w);
  RatFunc lambda;
  OreOp L = normalize_operator_numeric(r.L, t, &lambda);
  return {L, r.certificate * lambda};
}

bool verify_telescoper(const OreOp& L, const DiffForm& w, const RatFunc& g) {
  const Var t = param_of(w.ring());
  return ore_apply(L, w, t) == exterior_derivative(DiffForm::scalar(w.ring(), w.nvars(), g));
}

bool has_telescoper_below(const DiffForm& w, int r) {
  if (r <= 0) return false;
  const Var t = param_of(w.ring());
  std::vector<std::vector<RatFunc>> cols;
  DiffForm d = w;
  for (int i = 0; i < r; ++i) {
    if (i > 0) d = ore_apply(OreOp::dt(), d, t);
    DiffForm tilde = hermite_one_form(d).tilde;
    std::vector<RatFunc> col;
    for (int k = 0; k < w.nvars(); ++k) col.push_back(tilde.coeff(Basis{1} << k));
    cols.push_back(std::move(col));
  }
  return rank_of(cols, t) < cols.size();
}

}  // namespace formint
