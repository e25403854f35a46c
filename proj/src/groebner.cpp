#include "formint/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "formint/algebra.hpp"
#include "formint/errors.hpp"

namespace formint {

namespace {

struct Tracked {
  MPoly p;
  std::vector<MPoly> co;
};

void axpy(std::vector<MPoly>& dst, const std::vector<MPoly>& src, const Monomial& m, const Rational& c) {
  for (std::size_t i = 0; i < dst.size(); ++i) {
    if (!src[i].is_zero()) dst[i] -= src[i].mul_term(m, c);
  }
}

void scale(Tracked& t, const Rational& c) {
  t.p = t.p * c;
  for (auto& q : t.co) q = q * c;
}

// Full reduction of t by the basis (skipping index `skip`), tracking cofactors.
void reduce(Tracked& t, const std::vector<Tracked>& basis, std::size_t skip = static_cast<std::size_t>(-1)) {
  std::vector<Term> rem;
  while (!t.p.is_zero()) {
    const Term lt = t.p.leading_term();
    bool divided = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].p.is_zero()) continue;
      const Term& g = basis[k].p.leading_term();
      if (!g.mono.divides(lt.mono)) continue;
      Monomial m = lt.mono / g.mono;
      Rational c = lt.coeff / g.coeff;
      t.p -= basis[k].p.mul_term(m, c);
      axpy(t.co, basis[k].co, m, c);
      divided = true;
      break;
    }
    if (!divided) {
      rem.push_back(lt);
      t.p -= MPoly::monomial(t.p.ring(), lt.mono, lt.coeff);
    }
  }
  t.p = MPoly(t.p.ring(), std::move(rem));
}

}  // namespace

GBasis groebner_basis(const std::vector<MPoly>& input) {
  GBasis out;
  out.input = input;
  RingPtr ring;
  for (const auto& g : input) ring = common_ring(ring, g.ring());
  const std::size_t n = input.size();
  std::vector<Tracked> basis;
  for (std::size_t i = 0; i < n; ++i) {
    if (input[i].is_zero()) continue;
    Tracked t{input[i].with_ring(ring), std::vector<MPoly>(n, MPoly(ring))};
    t.co[i] = MPoly(ring, Rational(1));
    scale(t, 1 / t.p.leading_coeff());
    basis.push_back(std::move(t));
  }
  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
  }
  auto lm = [&](std::size_t i) -> const Monomial& { return basis[i].p.leading_mono(); };
  while (!pending.empty()) {
    // normal selection strategy: smallest lcm first
    auto best = pending.begin();
    Monomial best_l = lm(best->first).lcm(lm(best->second));
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lm(it->first).lcm(lm(it->second));
      if (grevlex_greater(best_l, l)) {
        best = it;
        best_l = l;
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);
    if (lm(i).gcd(lm(j)).is_one()) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j || !lm(k).divides(best_l)) continue;
      if (!pending.count({std::min(i, k), std::max(i, k)}) && !pending.count({std::min(j, k), std::max(j, k)})) {
        chain = true;
      }
    }
    if (chain) continue;
    Tracked s{MPoly(ring), std::vector<MPoly>(n, MPoly(ring))};
    const Monomial mi = best_l / lm(i), mj = best_l / lm(j);
    s.p = basis[i].p.mul_term(mi, 1) - basis[j].p.mul_term(mj, 1);
    for (std::size_t c = 0; c < n; ++c) s.co[c] = basis[i].co[c].mul_term(mi, 1) - basis[j].co[c].mul_term(mj, 1);
    reduce(s, basis);
    if (s.p.is_zero()) continue;
    scale(s, 1 / s.p.leading_coeff());
    const std::size_t k = basis.size();
    basis.push_back(std::move(s));
    for (std::size_t a = 0; a < k; ++a) pending.emplace(a, k);
  }
  // minimal basis: drop elements whose leading monomial is divisible by another's
  std::vector<Tracked> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      if (lm(k).divides(lm(i)) && (lm(k) != lm(i) || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Tracked t = minimal[i];
    reduce(t, minimal, i);
    scale(t, 1 / t.p.leading_coeff());
    minimal[i] = std::move(t);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const Tracked& a, const Tracked& b) { return grevlex_greater(b.p.leading_mono(), a.p.leading_mono()); });
  for (auto& t : minimal) {
    out.gens.push_back(t.p);
    out.cofactors.push_back(t.co);
  }
  return out;
}

NormalForm normal_form(const MPoly& p, const GBasis& G) {
  RingPtr ring = p.ring();
  for (const auto& g : G.gens) ring = common_ring(ring, g.ring());
  const std::size_t n = G.input.size();
  std::vector<Tracked> basis;
  for (std::size_t k = 0; k < G.gens.size(); ++k) basis.push_back({G.gens[k], G.cofactors[k]});
  Tracked t{p.with_ring(ring), std::vector<MPoly>(n, MPoly(ring))};
  reduce(t, basis);
  NormalForm nf;
  nf.remainder = t.p;
  // reduce() accumulated -sum q_i * input_i into the cofactors
  for (auto& q : t.co) nf.quotients.push_back(-q);
  return nf;
}

std::vector<MPoly> jacobian(const MPoly& Q, int n) {
  std::vector<MPoly> out;
  for (Var v = 0; v < n; ++v) out.push_back(Q.derivative(v));
  return out;
}

bool is_smooth(const MPoly& Q) {
  if (!is_homogeneous(Q)) throw NotHomogeneous();
  if (Q.is_constant()) throw PreconditionViolated("is_smooth needs a nonconstant polynomial");
  const int n = static_cast<int>(Q.ring()->size());
  GBasis G = groebner_basis(jacobian(Q, n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& g : G.gens) {
    const Monomial& m = g.leading_mono();
    if (m.is_one()) return true;
    Var v = m.pure_power_var();
    if (v >= 0 && v < n) seen[static_cast<std::size_t>(v)] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace formint
