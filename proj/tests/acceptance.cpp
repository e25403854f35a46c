// One PASS/FAIL line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "formint/errors.hpp"
#include "formint/griffiths_dwork.hpp"
#include "formint/oneform.hpp"
#include "formint/pform.hpp"
#include "formint/telescoping.hpp"
#include "generators.hpp"

using namespace formint;
using namespace formint::testing;

namespace {

const char* kOmega =
    "(t*x*y*z-1)/(x^2*y*z)*d(x) + (t*x*y*z-1)/(x*y^2*z)*d(y) + (t^2*x*y*z+x*y*z-1)/(x*y*z^2)*d(z)";
const char* kTwoForm = "(1/(z^2-x) + 1/(x*y))*d(x,y) + 1/(z^2-x)*d(y,z) + (y-2*y*z)/(z^2-x)^2*d(x,z)";

// Failure details for the current criterion.
std::ostringstream note;

bool expect(bool ok, const std::string& what) {
  if (!ok) note << (note.tellp() > 0 ? "; " : "") << what;
  return ok;
}

bool c1() {
  auto R = make_form_ring({"x", "y", "z"});
  auto H = hermite_one_form(parse_form(kOmega, R, 3));
  bool ok = expect(H.g.to_string() == "1/(x*y*z)", "g = " + H.g.to_string());
  ok &= expect(H.tilde.to_string() == "t/x*d(x) + t/y*d(y) + (t^2+1)/z*d(z)", "tilde = " + H.tilde.to_string());
  return ok;
}

bool c2() {
  auto R = make_form_ring({"x", "y", "z"});
  DiffForm w = parse_form(kOmega, R, 3);
  Telescoped T = ct_one_form(w);
  OreOp expected({rf("2*t^2+2", R), rf("-2*t^3-2*t", R), rf("t^4-1", R)});
  bool ok = expect(T.L == expected, "L = " + T.L.to_string());
  ok &= expect(T.certificate == rf("(2*t^2+2)/(x*y*z)", R), "certificate = " + T.certificate.to_string());
  ok &= expect(verify_telescoper(T.L, w, T.certificate), "apply(L, w) != d(certificate)");
  ok &= expect(!has_telescoper_below(w, T.L.order()), "a telescoper of lower order exists");
  return ok;
}

bool c3() {
  auto R = make_form_ring({"x", "y"});
  DiffForm w = parse_form("1/(x*y)*d(x,y)", R, 2);
  PrimitiveForm P = integrate_closed_pform(w);
  bool ok = expect(P.coeffs.size() == 1 && P.coeffs.count(1u), "expected a single dx coefficient");
  if (!ok) return false;
  const Primitive& p = P.coeffs.at(1u);
  ok &= expect(p.rational.is_zero(), "nonzero rational part");
  // sum over x*c + 1 = 0 of c log y is -(1/x) log y
  ok &= expect(p.logs.size() == 1 && p.logs[0].respoly == poly("x*_c+1", R) && p.logs[0].argpoly == rf("y", R) &&
                   p.logs[0].var == 1,
               "log term differs from -(1/x) log y");
  ok &= expect(expand_primitive_derivative(P) == w, "d-expansion differs from the input");
  return ok;
}

bool c4() {
  auto R = make_form_ring({"x", "y", "z"});
  DiffForm w = parse_form(kTwoForm, R, 3);
  PrimitiveForm P = integrate_closed_pform(w);
  bool ok = expect(expand_primitive_derivative(P) == w, "d-expansion differs from the input");
  bool found = false;
  for (const auto& [b, p] : P.coeffs) {
    (void)b;
    for (const auto& t : p.logs) {
      if (t.var == 2 && (t.respoly == poly("4*x*_c^2-1", R) || t.respoly == poly("1-4*x*_c^2", R))) found = true;
    }
  }
  ok &= expect(found, "no stage-3 log with residue polynomial 1-4x c^2");
  return ok;
}

bool c5() {
  auto A = make_form_ring({"x", "y", "z"});
  bool ok = true;
  for (int n : {2, 4, 5}) {
    std::string s = "(x^" + std::to_string(n) + "+y^" + std::to_string(n) + "+z^" + std::to_string(n) + ")";
    std::string c = "1/(3-" + std::to_string(n) + ")";
    RatFunc f = rf("1/" + s, A);
    std::vector<RatFunc> u{rf(c + "*x/" + s, A), rf(c + "*y/" + s, A), rf(c + "*z/" + s, A)};
    ok &= expect(verify_picard_solution(f, u), "rejected n = " + std::to_string(n));
    RatFunc div = u[0].derivative(0) + u[1].derivative(1) + u[2].derivative(2);
    ok &= expect(div == f, "divergence differs for n = " + std::to_string(n));
  }
  return ok;
}

MPoly random_homogeneous(std::mt19937_64& g, const RingPtr& R, int n, unsigned d, int nterms) {
  std::vector<Term> terms;
  for (int k = 0; k < nterms; ++k) {
    Monomial m;
    for (unsigned e = 0; e < d; ++e) m = m * Monomial::var(uniform(g, 0, n - 1));
    terms.push_back({m, small_rational(g, 4)});
  }
  return MPoly(R, std::move(terms));
}

bool c6() {
  auto P = make_projective_ring(3);
  MPoly Q = poly("xi0^4+xi1^4+xi2^4+xi3^4", P);
  auto r1 = gd_reduce({MPoly(P, Rational(1)), Q, 1, 3});
  bool ok = expect(!r1.exact && r1.remainders.size() == 1 && r1.remainders[0] == MPoly(P, Rational(1)),
                   "Omega/Q: expected r1 = 1");
  auto r2 = gd_reduce({poly("4*xi0^3*xi1", P), Q, 2, 3});
  bool zeros = r2.exact;
  for (const auto& r : r2.remainders) zeros = zeros && r.is_zero();
  ok &= expect(zeros, "4 xi0^3 xi1 Omega/Q^2: expected exact");
  auto r3 = gd_reduce({poly("xi0^4", P), Q, 2, 3});
  ok &= expect(!r3.exact && r3.remainders.size() == 2 && r3.remainders[0].is_zero() &&
                   r3.remainders[1] == MPoly(P, Rational(1, 4)),
               "xi0^4 Omega/Q^2: expected class (1/4) Omega/Q");
  auto g = rng_for("acceptance-gd");
  int checked = 0;
  while (checked < 50) {
    MPoly Qr(P);
    for (int k = 0; k < 4; ++k) Qr += MPoly::var(P, k, 4) * small_rational(g, 3, false);
    if (uniform(g, 0, 1)) {
      MPoly Qp = Qr + random_homogeneous(g, P, 4, 4, 1);
      if (is_smooth(Qp)) Qr = Qp;
    }
    unsigned ell = static_cast<unsigned>(uniform(g, 1, 3));
    MPoly num = random_homogeneous(g, P, 4, 4 * ell - 4, 3);
    if (num.is_zero()) continue;
    GDResult r = gd_reduce({num, Qr, ell, 3});
    ok &= expect(r.reconstruction_checked &&
                     gd_reconstruct(r, Qr, P, 3) == omega_form(P, 3) * RatFunc(num, Qr.pow(ell)),
                 "reconstruction failed for Q = " + Qr.to_string());
    ++checked;
  }
  return ok;
}

bool c7() {
  auto A = make_form_ring({"x", "y", "z"});
  auto P = make_projective_ring(3);
  auto h = homogenize_m_form(rf("1/(x^3+y^3+z^3)", A), 3);
  bool ok = expect(h.form.P == MPoly(P, Rational(1)) && h.form.ell == 1, "expected P = 1, ell = 1");
  ok &= expect(h.form.Q == poly("xi0*(xi1^3+xi2^3+xi3^3)", P), "Q = " + h.form.Q.to_string());
  ok &= expect(!h.violations.empty(), "regularity violation not flagged");
  bool refused = false;
  try {
    gd_reduce(h.form);
  } catch (const NotSmooth&) {
    refused = true;
  }
  ok &= expect(refused, "reduction did not refuse the singular polar locus");
  return ok;
}

bool c8a() {
  auto g = rng_for("acceptance-oneform");
  auto R = make_form_ring({"x", "y", "z"});
  bool ok = true;
  for (int i = 0; i < 200; ++i) {
    int m = uniform(g, 1, 3);
    int nlogs = 0;
    DiffForm w = random_closed_1form(g, R, m, nlogs);
    Primitive P = integrate_closed_1form(w);
    ok &= expect(primitive_differential(P, R, m) == w, "round trip failed on " + w.to_string());
  }
  return ok;
}

bool c8b() {
  auto g = rng_for("acceptance-pform");
  auto R = make_form_ring({"x1", "x2", "x3", "x4"});
  bool ok = true;
  int done = 0;
  while (done < 100) {
    int p = uniform(g, 2, 3);
    int m = uniform(g, p, 4);
    DiffForm w = random_closed_pform(g, R, m, p);
    if (w.is_zero()) continue;
    ++done;
    ok &= expect(expand_primitive_derivative(integrate_closed_pform(w)) == w, "round trip failed on " + w.to_string());
  }
  return ok;
}

bool c8c() {
  auto g = rng_for("acceptance-forms");
  auto R = make_form_ring({"x1", "x2", "x3", "x4"});
  bool ok = true;
  for (int i = 0; i < 500; ++i) {
    int m = uniform(g, 1, 4);
    int p = uniform(g, 0, m - 1);
    DiffForm w = random_form(g, R, m, p);
    DiffForm dw = exterior_derivative(w);
    ok &= expect(exterior_derivative(dw).is_zero(), "d(d(w)) != 0");
    DiffForm dxm = DiffForm::monomial(R, m, {m - 1}, RatFunc::constant(1));
    TopSplit s = decompose_top(w.degree() > 0 ? w : wedge(w, dxm));
    ok &= expect(truncated_derivative(wedge(s.mu, dxm), m, TruncMode::Single).is_zero(), "d_m(mu ^ dx_m) != 0");
    if (m > 1) {
      ok &= expect(exterior_derivative(wedge(w, dxm)) == wedge(truncated_derivative(w, m - 1, TruncMode::Prefix), dxm),
                   "d(w ^ dx_m) != d_{m-1}(w) ^ dx_m");
    }
  }
  return ok;
}

bool c8d() {
  auto R = make_form_ring({"x", "y"});
  auto g = rng_for("acceptance-telescoping");
  bool ok = true;
  for (int i = 0; i < 50; ++i) {
    DiffForm w = random_parametric_1form(g, R);
    Telescoped T = ct_one_form(w);
    ok &= expect(verify_telescoper(T.L, w, T.certificate), "verification failed on " + w.to_string());
    ok &= expect(!has_telescoper_below(w, T.L.order()), "not minimal on " + w.to_string());
  }
  return ok;
}

bool c9() {
  note << "no large-scale experiments to scale down";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    double budget_ms;
    std::function<bool()> run;
  };
  const double golden = 5000, suite = 120000;
  const std::vector<Criterion> all = {
      {"1", "three-variable 1-form Hermite golden", golden, c1},
      {"2", "three-variable 1-form minimal telescoper golden", golden, c2},
      {"3", "1/(xy) dx^dy primitive golden", golden, c3},
      {"4", "three-variable 2-form primitive", golden, c4},
      {"5", "Picard solutions for n = 2, 4, 5", golden, c5},
      {"6", "Griffiths-Dwork on the Fermat quartic", golden, c6},
      {"7", "homogenization of 1/(x^3+y^3+z^3)", golden, c7},
      {"8a", "200 closed 1-form round trips", suite, c8a},
      {"8b", "100 closed 2-/3-form round trips", suite, c8b},
      {"8c", "500 d^2 = 0 and top-variable identities", suite, c8c},
      {"8d", "50 telescopers verified and minimal", suite, c8d},
      {"9", "results not reproducible at desk scale", golden, c9},
  };
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  std::printf("seed %llu\n", static_cast<unsigned long long>(base_seed()));
  int failed = 0;
  for (const auto& c : all) {
    note.str("");
    note.clear();
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      note << "threw: " << e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (ms > c.budget_ms) {
      ok = false;
      note << (note.tellp() > 0 ? "; " : "") << "over the time budget";
    }
    failed += ok ? 0 : 1;
    std::printf("criterion %-3s %s  %-48s %9.1f ms%s%s\n", c.id, ok ? "PASS" : "FAIL", c.name, ms,
                note.tellp() > 0 ? "  " : "", note.str().c_str());
  }
  return failed == 0 ? 0 : 1;
}
