#include <doctest.h>

#include "formint/errors.hpp"
#include "formint/griffiths_dwork.hpp"
#include "test_support.hpp"

using namespace formint;
using namespace formint::testing;

namespace {

MPoly fermat_quartic(const RingPtr& R, int m) {
  MPoly Q(R);
  for (int i = 0; i <= m; ++i) Q += MPoly::var(R, i, 4);
  return Q;
}

// Random homogeneous polynomial of degree d in the first n variables.
MPoly random_homogeneous(std::mt19937_64& g, const RingPtr& R, int n, unsigned d, int nterms) {
  std::vector<Term> terms;
  for (int k = 0; k < nterms; ++k) {
    Monomial m;
    for (unsigned e = 0; e < d; ++e) m = m * Monomial::var(uniform(g, 0, n - 1));
    terms.push_back({m, small_rational(g, 4)});
  }
  return MPoly(R, std::move(terms));
}

}  // namespace

TEST_CASE("groebner_basis examples") {
  auto R = make_ring({"x", "y"});
  auto G = groebner_basis({poly("x", R), poly("y", R)});
  REQUIRE(G.gens.size() == 2);
  CHECK(((G.gens[0] == poly("x", R) && G.gens[1] == poly("y", R)) ||
         (G.gens[0] == poly("y", R) && G.gens[1] == poly("x", R))));

  // S(x^2-y, xy-1) = -y^2 + x, which has a new leading term; nothing else survives
  auto G2 = groebner_basis({poly("x^2-y", R), poly("x*y-1", R)});
  std::vector<MPoly> expected{poly("x^2-y", R), poly("x*y-1", R), poly("y^2-x", R)};
  REQUIRE(G2.gens.size() == 3);
  for (const auto& e : expected) CHECK(std::find(G2.gens.begin(), G2.gens.end(), e) != G2.gens.end());
  CHECK(normal_form(poly("y^3-1", R), G2).remainder.is_zero());
  CHECK_FALSE(normal_form(poly("x+y", R), G2).remainder.is_zero());

  auto P = make_projective_ring(3);
  auto GJ = groebner_basis(jacobian(fermat_quartic(P, 3), 4));
  REQUIRE(GJ.gens.size() == 4);
  for (int i = 0; i <= 3; ++i) {
    CHECK(std::find(GJ.gens.begin(), GJ.gens.end(), MPoly::var(P, i, 3)) != GJ.gens.end());
  }
}

TEST_CASE("normal_form examples") {
  auto P = make_projective_ring(3);
  auto G = groebner_basis(jacobian(fermat_quartic(P, 3), 4));
  auto one = normal_form(MPoly(P, Rational(1)), G);
  CHECK(one.remainder == MPoly(P, Rational(1)));
  auto x4 = normal_form(MPoly::var(P, 0, 4), G);
  CHECK(x4.remainder.is_zero());
  CHECK(x4.quotients[0] == MPoly::var(P, 0) * Rational(1, 4));
  CHECK(x4.quotients[1].is_zero());
}

TEST_CASE("is_smooth examples") {
  auto P = make_projective_ring(2);
  CHECK(is_smooth(fermat_quartic(make_projective_ring(3), 3)));
  CHECK_FALSE(is_smooth(poly("xi0*xi1*xi2", P)));
  CHECK(is_smooth(poly("xi0^2+xi1^2+xi2^2", P)));
  CHECK_THROWS_AS(is_smooth(poly("xi0^2+xi1", P)), NotHomogeneous);
}

TEST_CASE("gd_reduce on the Fermat quartic") {
  auto P = make_projective_ring(3);
  MPoly Q = fermat_quartic(P, 3);

  auto r1 = gd_reduce({MPoly(P, Rational(1)), Q, 1, 3});
  CHECK_FALSE(r1.exact);
  REQUIRE(r1.remainders.size() == 1);
  CHECK(r1.remainders[0] == MPoly(P, Rational(1)));

  auto r2 = gd_reduce({poly("4*xi0^3*xi1", P), Q, 2, 3});
  CHECK(r2.exact);
  REQUIRE(r2.remainders.size() == 2);
  CHECK(r2.remainders[0].is_zero());
  CHECK(r2.remainders[1].is_zero());
  CHECK(r2.reconstruction_checked);

  auto r3 = gd_reduce({poly("xi0^4", P), Q, 2, 3});
  CHECK_FALSE(r3.exact);
  REQUIRE(r3.remainders.size() == 2);
  CHECK(r3.remainders[0].is_zero());
  CHECK(r3.remainders[1] == MPoly(P, Rational(1, 4)));

  auto early = gd_reduce({MPoly(P, Rational(1)), Q, 1, 3}, true);
  CHECK_FALSE(early.exact);
  CHECK_FALSE(early.reconstruction_checked);

  CHECK_THROWS_AS(gd_reduce({poly("xi0", P), Q, 2, 3}), DegreeMismatch);
  CHECK_THROWS_AS(gd_reduce({MPoly(P, Rational(1)), poly("xi0*xi1*xi2*xi3", P), 1, 3}), NotSmooth);
  CHECK_THROWS_AS(gd_reduce({MPoly(P, Rational(1)), poly("xi0^4+xi1", P), 1, 3}), NotHomogeneous);
}

TEST_CASE("the phi forms differentiate to the pole-reduction identity") {
  auto P = make_projective_ring(2);
  MPoly Q = poly("xi0^3+2*xi1^3+3*xi2^3+xi0*xi1*xi2", P);
  GDStage st{3, {poly("xi1^4", P), poly("xi0*xi2^3", P), poly("xi2^4-xi0^2*xi1^2", P)}};
  MPoly S(P), T(P);
  for (int i = 0; i <= 2; ++i) {
    S += st.A[static_cast<std::size_t>(i)] * Q.derivative(i);
    T += st.A[static_cast<std::size_t>(i)].derivative(i);
  }
  DiffForm Om = omega_form(P, 2);
  CHECK(exterior_derivative(phi_form(st, Q, P, 2)) ==
        Om * RatFunc(S, Q.pow(3)) - Om * RatFunc(T * Rational(1, 2), Q.pow(2)));
  // Omega pulled back to the chart xi0 = 1 is dx ^ dy
  CHECK(omega_form(P, 2).terms().at(6u) == RatFunc(MPoly::var(P, 0)));
}

TEST_CASE("homogenize_m_form examples") {
  auto A = make_form_ring({"x", "y", "z"});
  auto h = homogenize_m_form(rf("1/(x^3+y^3+z^3)", A), 3);
  auto P = make_projective_ring(3);
  CHECK_FALSE(h.zero);
  CHECK(h.form.P == MPoly(P, Rational(1)));
  CHECK(h.form.Q == poly("xi0*(xi1^3+xi2^3+xi3^3)", P));
  CHECK(h.form.ell == 1);
  CHECK_FALSE(h.violations.empty());

  auto one = homogenize_m_form(rf("1", A), 2);
  auto P2 = make_projective_ring(2);
  CHECK(one.form.P == MPoly(P2, Rational(1)));
  CHECK(one.form.Q == poly("xi0", P2));
  CHECK(one.form.ell == 3);
  CHECK(one.violations.empty());
  CHECK(one.form.ell * one.form.Q.total_degree() == one.form.P.total_degree() + 3);

  CHECK(homogenize_m_form(RatFunc(MPoly(A)), 3).zero);
}

TEST_CASE("verify_picard_solution") {
  auto A = make_form_ring({"x", "y", "z"});
  for (int n : {2, 4, 5}) {
    std::string s = "(x^" + std::to_string(n) + "+y^" + std::to_string(n) + "+z^" + std::to_string(n) + ")";
    RatFunc f = rf("1/" + s, A);
    std::string c = "1/(3-" + std::to_string(n) + ")";
    std::vector<RatFunc> u{rf(c + "*x/" + s, A), rf(c + "*y/" + s, A), rf(c + "*z/" + s, A)};
    CHECK(verify_picard_solution(f, u));
    u[0] = u[0] * Rational(2);
    CHECK_FALSE(verify_picard_solution(f, u));
  }
  CHECK(verify_picard_solution(RatFunc(MPoly(A)), {RatFunc(MPoly(A)), RatFunc(MPoly(A)), RatFunc(MPoly(A))}));
}

TEST_CASE("property: Euler identity and normal form idempotence") {
  auto g = rng_for("gd-euler");
  auto P = make_projective_ring(3);
  auto G = groebner_basis(jacobian(fermat_quartic(P, 3), 4));
  for (int i = 0; i < 50; ++i) {
    unsigned d = static_cast<unsigned>(uniform(g, 1, 5));
    MPoly Q = random_homogeneous(g, P, 4, d, 4);
    if (Q.is_zero()) continue;
    MPoly e(P);
    for (int k = 0; k < 4; ++k) e += MPoly::var(P, k) * Q.derivative(k);
    CHECK(e == Q * Rational(static_cast<long>(d)));
    auto nf = normal_form(Q, G);
    CHECK(normal_form(nf.remainder, G).remainder == nf.remainder);
    MPoly back = nf.remainder;
    for (std::size_t k = 0; k < 4; ++k) back += nf.quotients[k] * G.input[k];
    CHECK(back == Q);
  }
}

TEST_CASE("property: reduction on random smooth quartics") {
  auto g = rng_for("gd-random");
  auto P = make_projective_ring(3);
  int perturbed = 0;
  for (int i = 0; i < 50; ++i) {
    MPoly Q(P);
    for (int k = 0; k < 4; ++k) Q += MPoly::var(P, k, 4) * small_rational(g, 3, false);
    if (uniform(g, 0, 1)) {
      MPoly Qp = Q + random_homogeneous(g, P, 4, 4, 1);
      if (is_smooth(Qp)) {
        Q = Qp;
        ++perturbed;
      }
    }
    unsigned ell = static_cast<unsigned>(uniform(g, 1, 3));
    MPoly num = random_homogeneous(g, P, 4, 4 * ell - 4, 3);
    if (num.is_zero()) continue;
    GDResult r = gd_reduce({num, Q, ell, 3});
    CHECK(r.reconstruction_checked);
    DiffForm lhs = omega_form(P, 3) * RatFunc(num, Q.pow(ell));
    CHECK(gd_reconstruct(r, Q, P, 3) == lhs);
    bool allzero = true;
    for (const auto& rk : r.remainders) allzero = allzero && rk.is_zero();
    CHECK(r.exact == allzero);
  }
  CHECK(perturbed > 0);
}

TEST_CASE("property: constructed exact forms reduce to zero, remainders do not") {
  auto g = rng_for("gd-soundness");
  auto P = make_projective_ring(3);
  MPoly Q = fermat_quartic(P, 3);
  auto G = groebner_basis(jacobian(Q, 4));
  for (int i = 0; i < 20; ++i) {
    // exact: d(phi) for a random phi of order 2
    GDStage st{2, {}};
    for (int k = 0; k < 4; ++k) st.A.push_back(random_homogeneous(g, P, 4, 1, 2));
    MPoly S(P), T(P);
    for (int k = 0; k < 4; ++k) {
      S += st.A[static_cast<std::size_t>(k)] * Q.derivative(k);
      T += st.A[static_cast<std::size_t>(k)].derivative(k);
    }
    // d(phi) = S Omega/Q^2 - T Omega/Q = (S - T Q) Omega / Q^2
    MPoly num = S - T * Q;
    if (num.is_zero()) continue;
    CHECK(gd_reduce({num, Q, 2, 3}).exact);

    MPoly r = normal_form(random_homogeneous(g, P, 4, 4, 4), G).remainder;
    if (r.is_zero()) continue;
    CHECK_FALSE(gd_reduce({r, Q, 2, 3}).exact);
  }
}
