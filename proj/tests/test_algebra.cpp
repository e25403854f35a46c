#include <doctest.h>

#include "formint/algebra.hpp"
#include "formint/errors.hpp"
#include "formint/fractions.hpp"
#include "formint/kpoly.hpp"
#include "test_support.hpp"

using namespace formint;
using namespace formint::testing;

namespace {

RingPtr xyz() { return make_form_ring({"x", "y", "z"}); }

}  // namespace

TEST_CASE("polynomial printing and arithmetic") {
  auto R = xyz();
  MPoly p = poly("2*t^2+2", R);
  CHECK(p.to_string() == "2*t^2+2");
  CHECK(poly("-x*y", R).to_string() == "-x*y");
  CHECK(poly("1/2*x", R).to_string() == "1/2*x");
  CHECK((poly("x+y", R) * poly("x-y", R)) == poly("x^2-y^2", R));
  CHECK(poly("x^2-y^2", R) / poly("x-y", R) == poly("x+y", R));
  CHECK_FALSE(poly("x^2+1", R).divide_exact(poly("x-1", R)).has_value());
}

TEST_CASE("normalize_ratfunc") {
  auto R = xyz();
  RatFunc a = normalize_ratfunc(poly("2*x", R), poly("4*x^2", R));
  CHECK(a.to_string() == "1/(2*x)");
  CHECK(a == rf("1/(2*x)", R));
  RatFunc b = normalize_ratfunc(poly("x^2-y^2", R), poly("x-y", R));
  CHECK(b == RatFunc(poly("x+y", R)));
  CHECK(normalize_ratfunc(MPoly(R), poly("x", R)).is_zero());
  CHECK_THROWS_AS(normalize_ratfunc(poly("x", R), MPoly(R)), ZeroDenominator);
  CHECK(rf("(2*t^2+2)/(x*y*z)", R).to_string() == "(2*t^2+2)/(x*y*z)");
  CHECK(rf("-1/(z^2-x)", R).to_string() == "-1/(z^2-x)");
  CHECK(rf("x^2/2", R).to_string() == "x^2/2");
}

TEST_CASE("gcd_mpoly examples") {
  auto R = xyz();
  MPoly p = poly("3*x^2*y - 6*y", R);
  CHECK(gcd(p, p) == p.canonical());
  CHECK(gcd(poly("x^2-y^2", R), poly("x-y", R)) == poly("x-y", R));
  CHECK(gcd(poly("x^2+1", R), poly("x-1", R)).is_one());
  CHECK_THROWS_AS(gcd(MPoly(R), MPoly(R)), BothZero);
  CHECK(gcd(poly("x^2*y", R), poly("x*y^3+x^2", R)) == poly("x", R));
}

TEST_CASE("squarefree_factorization examples") {
  auto R = xyz();
  auto s = squarefree_factorization(poly("x^3+x^2", R), 0);
  REQUIRE(s.factors.size() == 2);
  CHECK(s.unit == 1);
  CHECK(s.factors[0].first == poly("x+1", R));
  CHECK(s.factors[0].second == 1);
  CHECK(s.factors[1].first == poly("x", R));
  CHECK(s.factors[1].second == 2);
  CHECK(s.expand() == poly("x^3+x^2", R));

  auto s2 = squarefree_factorization(poly("x+1", R), 0);
  REQUIRE(s2.factors.size() == 1);
  CHECK(s2.factors[0].second == 1);

  auto s3 = squarefree_factorization(poly("(x^2-t)^2", R), 0);
  REQUIRE(s3.factors.size() == 1);
  CHECK(s3.factors[0].first == poly("x^2-t", R));
  CHECK(s3.factors[0].second == 2);
  CHECK_THROWS_AS(squarefree_factorization(MPoly(R), 0), ZeroInput);
}

TEST_CASE("resultant examples") {
  auto R = make_ring({"x", "t", "a", "z"});
  CHECK(resultant(poly("x^2+1", R), poly("x-t", R), 0) == poly("t^2+1", R));
  CHECK(resultant(poly("x-a", R), poly("x-a", R), 0).is_zero());
  CHECK(resultant(poly("x^2-2", R), poly("1-2*z*x", R), 0) == poly("1-8*z^2", R));
  CHECK(subresultant(poly("x^2-2", R), poly("1-2*z*x", R), 0, 0) == poly("1-8*z^2", R));
  CHECK(subresultant(poly("x^2-2", R), poly("1-2*z*x", R), 0, 1) == poly("1-2*z*x", R));
}

TEST_CASE("partial_fractions examples") {
  auto R = xyz();
  auto pf = partial_fractions(rf("1/(x*(x+1))", R), 0);
  CHECK(pf.polypart.is_zero());
  CHECK(pf.recombine() == rf("1/x - 1/(x+1)", R));

  auto pf2 = partial_fractions(rf("x^2/(x-1)", R), 0);
  CHECK(pf2.polypart == rf("x+1", R));
  REQUIRE(pf2.terms.size() == 1);
  CHECK(pf2.terms[0].denfactor == poly("x-1", R));
  CHECK(pf2.terms[0].numerator == RatFunc::constant(1));

  auto pf3 = partial_fractions(rf("1/x", R), 0);
  CHECK(pf3.polypart.is_zero());
  REQUIRE(pf3.terms.size() == 1);
  CHECK(pf3.terms[0].denfactor == poly("x", R));

  auto pf4 = partial_fractions(rf("(x^3+y)/(x^2*(x-y)^3)", R), 0);
  CHECK(pf4.recombine() == rf("(x^3+y)/(x^2*(x-y)^3)", R));
  for (const auto& t : pf4.terms) {
    CHECK(KPoly::from_ratfunc(t.numerator, 0).degree() < static_cast<int>(t.denfactor.degree(0)));
  }
}

TEST_CASE("trace_sum examples") {
  auto R = make_form_ring({"x"});
  const Var z = R->root();
  MPoly Rz = poly("_c^2-2", R);
  CHECK(trace_sum(Rz, poly("_c^2", R), poly("1", R), z) == RatFunc::constant(4));
  CHECK(trace_sum(poly("_c-1", R), poly("_c*x", R), poly("1", R), z) == rf("x", R));
  RatFunc s = trace_sum(Rz, poly("_c", R), poly("x-_c", R), z);
  CHECK(s == quadratic_root_sum(Rz, poly("_c", R), poly("x-_c", R), z));
  CHECK(s == rf("4/(x^2-2)", R));
  CHECK_THROWS_AS(trace_sum(Rz, poly("1", R), poly("_c^2-2", R), z), NonInvertibleDenominator);
}

TEST_CASE("property: planted gcd factor") {
  auto g = rng_for("gcd-planted");
  auto R = make_ring({"x", "y", "z"});
  for (int i = 0; i < 200; ++i) {
    int nv = uniform(g, 1, 3);
    auto vars = first_vars(nv);
    MPoly p = random_nonzero(g, R, vars, 3, 3);
    MPoly q = random_nonzero(g, R, vars, 3, 3);
    MPoly f = random_nonconstant(g, R, vars, 2, 3);
    MPoly G = gcd(p * f, q * f);
    CHECK((p * f).divide_exact(G).has_value());
    CHECK((q * f).divide_exact(G).has_value());
    CHECK(G.divide_exact(f).has_value());
  }
}

TEST_CASE("property: resultant vanishes iff common factor in var") {
  auto g = rng_for("resultant-gcd");
  auto R = make_ring({"x", "y", "z"});
  for (int i = 0; i < 100; ++i) {
    auto vars = first_vars(uniform(g, 1, 3));
    MPoly p = random_nonconstant(g, R, vars, 3, 3);
    MPoly q = random_nonconstant(g, R, vars, 3, 3);
    if (uniform(g, 0, 1)) {
      MPoly f = random_nonconstant(g, R, vars, 2, 2);
      p *= f;
      q *= f;
    }
    if (!p.depends_on(0) || !q.depends_on(0)) continue;
    MPoly res = resultant(p, q, 0);
    CHECK(res.is_zero() == gcd(p, q).depends_on(0));
    if (p.degree(0) != q.degree(0)) {
      const MPoly& a = p.degree(0) > q.degree(0) ? p : q;
      const MPoly& b = p.degree(0) > q.degree(0) ? q : p;
      MPoly s0 = subresultant(a, b, 0, 0);
      CHECK(s0 == resultant(a, b, 0));
    }
  }
}

TEST_CASE("property: squarefree decomposition reconstructs") {
  auto g = rng_for("sqf");
  auto R = make_ring({"x", "y", "z"});
  for (int i = 0; i < 100; ++i) {
    auto vars = first_vars(uniform(g, 1, 3));
    MPoly a = random_nonconstant(g, R, vars, 2, 3);
    MPoly b = random_nonconstant(g, R, vars, 2, 2);
    MPoly p = a * b * b * random_nonzero(g, R, vars, 1, 2);
    auto s = squarefree_factorization(p, 0);
    CHECK(s.expand() == p);
    for (std::size_t k = 0; k < s.factors.size(); ++k) {
      const MPoly& f = s.factors[k].first;
      if (f.depends_on(0)) CHECK_FALSE(gcd(f, f.derivative(0)).depends_on(0));
      for (std::size_t j = 0; j < k; ++j) CHECK(gcd(f, s.factors[j].first).is_one());
    }
    auto full = squarefree_full(p);
    CHECK(full.expand() == p);
  }
}

TEST_CASE("property: partial fractions recombine") {
  auto g = rng_for("partial-fractions");
  auto R = make_ring({"x", "y", "z"});
  for (int i = 0; i < 200; ++i) {
    auto vars = first_vars(uniform(g, 1, 3));
    MPoly n = random_poly(g, R, vars, 6, 4);
    MPoly d1 = random_nonconstant(g, R, vars, 2, 3);
    MPoly d2 = random_nonconstant(g, R, vars, 2, 2);
    MPoly d = d1 * d2 * (uniform(g, 0, 1) ? d2 : MPoly::constant(1));
    RatFunc f(n, d);
    auto pf = partial_fractions(f, 0);
    CHECK(pf.recombine() == f);
  }
}

TEST_CASE("property: trace sums of log derivatives match explicit roots") {
  auto g = rng_for("trace-quadratic");
  auto R = make_form_ring({"x", "y"});
  const Var z = R->root();
  for (int i = 0; i < 60; ++i) {
    // R(z) = z^2 + p z + q with p, q in Q[y]; B(z, x) linear in z.
    MPoly pz = random_poly(g, R, {1}, 1, 2);
    MPoly qz = random_nonzero(g, R, {1}, 2, 2);
    MPoly Rz = MPoly::var(R, z, 2) + pz * MPoly::var(R, z) + qz;
    if (!gcd(Rz, Rz.derivative(z)).is_one()) continue;
    MPoly B = MPoly::var(R, 0, static_cast<unsigned>(uniform(g, 1, 2))) + random_poly(g, R, {1}, 1, 2) * MPoly::var(R, z) +
              random_poly(g, R, {1}, 1, 2);
    MPoly num = MPoly::var(R, z) * B.derivative(0);
    RatFunc lhs;
    try {
      lhs = trace_sum(Rz, num, B, z);
    } catch (const NonInvertibleDenominator&) {
      continue;
    }
    CHECK(lhs == quadratic_root_sum(Rz, num, B, z));
  }
}
