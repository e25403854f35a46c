#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "formint/algebra.hpp"
#include "formint/forms.hpp"
#include "formint/parser.hpp"
#include "formint/ratfunc.hpp"

namespace formint::testing {

inline std::uint64_t base_seed() {
  if (const char* s = std::getenv("FORMINT_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611ULL;
}

/// Per-suite generator; the suite tag keeps suites independent of each other.
inline std::mt19937_64 rng_for(const std::string& suite) {
  std::uint64_t h = base_seed();
  for (char c : suite) h = h * 1099511628211ULL + static_cast<unsigned char>(c);
  return std::mt19937_64(h);
}

inline int uniform(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

inline Rational small_rational(std::mt19937_64& g, int bound = 5, bool allow_zero = true) {
  while (true) {
    int n = uniform(g, -bound, bound);
    if (!allow_zero && n == 0) continue;
    int d = uniform(g, 1, 3);
    Rational q(n, d);
    q.canonicalize();
    return q;
  }
}

/// Random polynomial in the listed variables with total degree <= max_deg.
inline MPoly random_poly(std::mt19937_64& g, const RingPtr& ring, const std::vector<Var>& vars, int max_deg, int nterms,
                         int coeff_bound = 5) {
  std::vector<Term> terms;
  for (int i = 0; i < nterms; ++i) {
    Monomial m;
    int budget = uniform(g, 0, max_deg);
    for (int k = 0; k < budget; ++k) {
      Var v = vars[static_cast<std::size_t>(uniform(g, 0, static_cast<int>(vars.size()) - 1))];
      m = m * Monomial::var(v);
    }
    terms.push_back({m, small_rational(g, coeff_bound)});
  }
  return MPoly(ring, std::move(terms));
}

inline MPoly random_nonconstant(std::mt19937_64& g, const RingPtr& ring, const std::vector<Var>& vars, int max_deg,
                                int nterms) {
  while (true) {
    MPoly p = random_poly(g, ring, vars, max_deg, nterms);
    if (!p.is_constant()) return p;
  }
}

inline MPoly random_nonzero(std::mt19937_64& g, const RingPtr& ring, const std::vector<Var>& vars, int max_deg,
                            int nterms) {
  while (true) {
    MPoly p = random_poly(g, ring, vars, max_deg, nterms);
    if (!p.is_zero()) return p;
  }
}

inline std::vector<Var> first_vars(int n) {
  std::vector<Var> v;
  for (int i = 0; i < n; ++i) v.push_back(i);
  return v;
}

/// Elements a + b*sqrt(d) over the rational functions; d is not a square.
struct QuadExt {
  RatFunc a, b, d;

  QuadExt operator+(const QuadExt& o) const { return {a + o.a, b + o.b, d}; }
  QuadExt operator*(const QuadExt& o) const { return {a * o.a + b * o.b * d, a * o.b + b * o.a, d}; }
  QuadExt inverse() const {
    RatFunc n = a * a - b * b * d;
    return {a / n, -b / n, d};
  }
};

/// h(c1) + h(c2) for the two roots of the quadratic R in z, computed by
/// substituting c = -p/2 +- sqrt(p^2/4 - q) explicitly.
inline RatFunc quadratic_root_sum(const MPoly& R, const MPoly& num, const MPoly& den, Var z) {
  auto cs = R.coefficients(z);
  RatFunc lead(cs[2]);
  RatFunc p = RatFunc(cs[1]) / lead, q = RatFunc(cs[0]) / lead;
  RatFunc half = RatFunc::constant(Rational(1, 2));
  RatFunc disc = p * p * Rational(1, 4) - q;
  QuadExt root{-(p * half), RatFunc::constant(1), disc};
  auto eval = [&](const MPoly& f) {
    auto fc = f.coefficients(z);
    QuadExt acc{RatFunc(MPoly()), RatFunc(MPoly()), disc};
    for (std::size_t k = fc.size(); k-- > 0;) {
      acc = acc * root + QuadExt{RatFunc(fc[k]), RatFunc(MPoly()), disc};
    }
    return acc;
  };
  QuadExt v = eval(num) * eval(den).inverse();
  // The conjugate root contributes a - b*sqrt(d).
  return v.a * Rational(2);
}

/// Random p-form in the first `nvars` variables with small rational coefficients.
inline DiffForm random_form(std::mt19937_64& g, const RingPtr& ring, int nvars, int degree, int max_deg = 2,
                            int max_terms = 3, int den_deg = -1) {
  if (den_deg < 0) den_deg = max_deg;
  auto vars = first_vars(nvars);
  DiffForm w(ring, nvars, degree);
  int nterms = uniform(g, 1, max_terms);
  for (int k = 0; k < nterms; ++k) {
    std::vector<int> idx;
    Basis b = 0;
    while (basis_degree(b) < degree) b |= Basis{1} << uniform(g, 0, nvars - 1);
    for (int i : basis_indices(b)) idx.push_back(i);
    RatFunc c(random_poly(g, ring, vars, max_deg, 2), random_nonzero(g, ring, vars, den_deg, 2));
    w = w + DiffForm::monomial(ring, nvars, idx, c);
  }
  return w;
}

/// d(random rational) + sum c_j d(log b_j) over the first m variables; the
/// c_j are nonzero rationals, optionally plus t.
inline DiffForm random_closed_1form(std::mt19937_64& g, const RingPtr& R, int m, int& nlogs) {
  auto vars = first_vars(m);
  RatFunc a(random_poly(g, R, vars, 2, 3), random_nonzero(g, R, vars, 2, 2));
  DiffForm w = exterior_derivative(DiffForm::scalar(R, m, a));
  nlogs = uniform(g, 0, 2);
  for (int k = 0; k < nlogs; ++k) {
    MPoly b = random_nonconstant(g, R, vars, 2, 3);
    RatFunc c(MPoly::constant(small_rational(g, 3, false)) + (uniform(g, 0, 1) ? MPoly::var(R, R->param()) : MPoly()));
    w = w + exterior_derivative(DiffForm::scalar(R, m, RatFunc(b))) * (c / RatFunc(b));
  }
  return w;
}

/// d of a random (p-1)-form with linear denominators plus, half the time,
/// c dlog(b1) ^ dlog(b2) with quadratic b_i (wedged with a coordinate
/// differential when p = 3). Quadratic denominators in the exact part make
/// the intermediate residue polynomials too large for a quick suite.
inline DiffForm random_closed_pform(std::mt19937_64& g, const RingPtr& R, int m, int p) {
  auto vars = first_vars(m);
  DiffForm w = exterior_derivative(random_form(g, R, m, p - 1, 2, 2, 1));
  if (uniform(g, 0, 1)) {
    DiffForm piece = DiffForm::scalar(R, m, RatFunc::constant(small_rational(g, 3, false)));
    for (int k = 0; k < 2; ++k) {
      MPoly b = random_nonconstant(g, R, vars, 2, 2);
      piece = wedge(piece, exterior_derivative(DiffForm::scalar(R, m, RatFunc(b))) * RatFunc(MPoly::constant(1), b));
    }
    if (p == 3) piece = wedge(piece, DiffForm::monomial(R, m, {uniform(g, 0, m - 1)}, RatFunc::constant(1)));
    w = w + piece;
  }
  return w;
}

/// Closed 1-form in x, y with parameter t: d(random rational in x, y, t) plus
/// t-dependent multiples of d(log b) with b involving t.
inline DiffForm random_parametric_1form(std::mt19937_64& g, const RingPtr& R) {
  const Var t = R->param();
  std::vector<Var> all{0, 1, t};
  RatFunc a(random_poly(g, R, all, 2, 2), random_nonzero(g, R, all, 2, 2));
  DiffForm w = exterior_derivative(DiffForm::scalar(R, 2, a));
  int nlogs = uniform(g, 1, 2);
  for (int k = 0; k < nlogs; ++k) {
    MPoly b = random_nonconstant(g, R, {0, 1}, 1, 2) + random_poly(g, R, {t}, 1, 1);
    if (!b.depends_on(0) && !b.depends_on(1)) continue;
    RatFunc c(random_nonzero(g, R, {t}, 1, 2));
    w = w + exterior_derivative(DiffForm::scalar(R, 2, RatFunc(b))) * (c / RatFunc(b));
  }
  return w;
}

inline RatFunc rf(const std::string& s, const RingPtr& ring) { return parse_ratfunc(s, ring); }
inline MPoly poly(const std::string& s, const RingPtr& ring) { return parse_poly(s, ring); }

}  // namespace formint::testing
