#include "formint/algebra.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "formint/errors.hpp"

namespace formint {

namespace {

// Dense univariate view: coefficient k multiplies v^k; coefficients are free of v.
using UPoly = std::vector<MPoly>;

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int udeg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly to_upoly(const MPoly& p, Var v) {
  UPoly u = p.coefficients(v);
  trim(u);
  return u;
}

MPoly from_upoly(const RingPtr& ring, const UPoly& u, Var v) { return MPoly::from_coefficients(ring, v, u); }

UPoly udiv_exact(const UPoly& a, const MPoly& c) {
  if (c.is_one()) return a;
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / c;
  return r;
}

UPoly uprem(UPoly r, const UPoly& b) {
  const int db = udeg(b);
  const MPoly& lb = b.back();
  int e = udeg(r) - db + 1;
  while (!r.empty() && udeg(r) >= db) {
    const int shift = udeg(r) - db;
    MPoly lr = r.back();
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shift)] -= lr * b[static_cast<std::size_t>(i)];
    trim(r);
    --e;
  }
  if (e > 0 && !r.empty()) {
    MPoly f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : r) c *= f;
  }
  return r;
}

MPoly gcd_rec(const MPoly& p, const MPoly& q);

MPoly gcd_list(MPoly g, const std::vector<MPoly>& cs) {
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MPoly monomial_gcd(const MPoly& mono, const MPoly& q) {
  Monomial m = mono.leading_mono();
  for (const auto& t : q.terms()) {
    m = m.gcd(t.mono);
    if (m.is_one()) break;
  }
  return MPoly::monomial(common_ring(mono.ring(), q.ring()), m, 1);
}

// Primitive subresultant remainder sequence; inputs primitive in v, result primitive in v.
MPoly prs_gcd(const MPoly& p, const MPoly& q, Var v) {
  RingPtr ring = common_ring(p.ring(), q.ring());
  UPoly a = to_upoly(p, v), b = to_upoly(q, v);
  if (udeg(a) < udeg(b)) std::swap(a, b);
  MPoly g(ring, 1), h(ring, 1);
  while (true) {
    const int delta = udeg(a) - udeg(b);
    UPoly r = uprem(a, b);
    if (r.empty()) break;
    if (udeg(r) == 0) return MPoly(ring, 1);
    a = std::move(b);
    MPoly div = g * h.pow(static_cast<unsigned>(delta));
    b = udiv_exact(r, div);
    g = a.back();
    if (delta > 0) h = g.pow(static_cast<unsigned>(delta)) / h.pow(static_cast<unsigned>(delta - 1));
  }
  MPoly c = gcd_list(MPoly(ring), b);
  return from_upoly(ring, udiv_exact(b, c), v);
}

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a)) {
    if (e & 1) r = mulmod(r, a);
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

// a mod kPrime; false when the denominator vanishes modulo the prime.
bool reduce_mod(const Rational& q, std::uint64_t& out) {
  const std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (d == 0) return false;
  out = mulmod(mpz_fdiv_ui(q.get_num_mpz_t(), kPrime), invmod(d));
  return true;
}

// Image of p in F_p[v] at x_u = point[u] for every u != v.
bool modular_image(const MPoly& p, Var v, const std::vector<std::uint64_t>& point, std::vector<std::uint64_t>& out) {
  out.assign(p.degree(v) + 1, 0);
  for (const auto& t : p.terms()) {
    std::uint64_t c;
    if (!reduce_mod(t.coeff, c)) return false;
    for (Var u = 0; u < static_cast<Var>(point.size()); ++u) {
      const unsigned e = t.mono.exp[static_cast<std::size_t>(u)];
      if (u != v && e) c = mulmod(c, powmod(point[static_cast<std::size_t>(u)], e));
    }
    auto& slot = out[t.mono.exp[static_cast<std::size_t>(v)]];
    slot = (slot + c) % kPrime;
  }
  return true;
}

int modular_euclid_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  auto trim_m = [](std::vector<std::uint64_t>& x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
  };
  trim_m(a);
  trim_m(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return 0;
    const std::uint64_t inv = invmod(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t f = mulmod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + kPrime - mulmod(f, b[i])) % kPrime;
      trim_m(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// Sufficient test for gcd(p, q) = 1: for every variable the images modulo a
// prime at a point keeping both leading coefficients nonzero are coprime.
bool images_coprime(const MPoly& p, const MPoly& q, std::uint32_t support) {
  std::size_t nv = 0;
  for (std::uint32_t s = support; s; s &= s - 1) nv = static_cast<std::size_t>(__builtin_ctz(s)) + 1;
  for (std::uint32_t s = support; s; s &= s - 1) {
    const Var v = __builtin_ctz(s);
    bool decided = false;
    for (int attempt = 0; attempt < 2 && !decided; ++attempt) {
      std::vector<std::uint64_t> point(nv);
      for (std::size_t u = 0; u < nv; ++u) point[u] = 3 + 7 * u + 13 * static_cast<std::size_t>(attempt) + 5 * static_cast<std::size_t>(v);
      std::vector<std::uint64_t> a, b;
      if (!modular_image(p, v, point, a) || !modular_image(q, v, point, b)) continue;
      if (a.size() != p.degree(v) + 1u || b.size() != q.degree(v) + 1u || a.back() == 0 || b.back() == 0) continue;
      decided = true;
      if (modular_euclid_degree(std::move(a), std::move(b)) != 0) return false;
    }
    if (!decided) return false;
  }
  return true;
}

// Dense integer polynomials, coefficient k multiplies v^k.
using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Integer primitive form of a univariate polynomial in v.
ZPoly to_zpoly(const MPoly& p, Var v) {
  Integer den = 1, num = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  ZPoly z(p.degree(v) + 1, Integer(0));
  for (const auto& t : p.terms()) {
    Integer c = t.coeff.get_num() * (den / t.coeff.get_den()) / num;
    z[t.mono.exp[static_cast<std::size_t>(v)]] = c;
  }
  return z;
}

Integer max_norm(const ZPoly& a) {
  Integer m = 0;
  for (const auto& c : a) {
    if (abs(c) > m) m = abs(c);
  }
  return m;
}

Integer zeval(const ZPoly& a, const Integer& x) {
  Integer r = 0;
  for (std::size_t k = a.size(); k-- > 0;) r = r * x + a[k];
  return r;
}

// Symmetric x-adic digits of h.
ZPoly zinterpolate(Integer h, const Integer& x) {
  ZPoly out;
  const Integer half = x / 2;
  while (h != 0) {
    Integer c = h % x;
    if (c > half) c -= x;
    if (c < -half) c += x;
    out.push_back(c);
    h = (h - c) / x;
  }
  return out;
}

void make_primitive(ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
}

// Exact quotient a / b over Z, or false if b does not divide a.
bool zdivide(ZPoly a, const ZPoly& b, ZPoly* q) {
  ztrim(a);
  if (a.size() < b.size()) {
    if (q) q->clear();
    return a.empty();
  }
  ZPoly quo(a.size() - b.size() + 1, Integer(0));
  while (!a.empty() && a.size() >= b.size()) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    quo[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    ztrim(a);
  }
  if (!a.empty()) return false;
  if (q) *q = std::move(quo);
  return true;
}

// Heuristic gcd of primitive integer polynomials; false if it gives up.
bool heuristic_gcd(const ZPoly& f, const ZPoly& g, ZPoly& out) {
  const Integer nf = max_norm(f), ng = max_norm(g);
  const Integer b = 2 * std::min(nf, ng) + 29;
  const Integer rf = nf / abs(f.back()), rg = ng / abs(g.back());
  const Integer lower = 2 * std::min(rf, rg) + 2;
  const Integer cap = Integer(99 * sqrt(b));
  Integer x = std::max(std::min(b, cap), lower);
  for (int attempt = 0; attempt < 6; ++attempt) {
    const Integer ff = zeval(f, x), gg = zeval(g, x);
    if (ff != 0 && gg != 0) {
      Integer h;
      mpz_gcd(h.get_mpz_t(), ff.get_mpz_t(), gg.get_mpz_t());
      ZPoly hp = zinterpolate(h, x);
      if (!hp.empty()) {
        make_primitive(hp);
        if (zdivide(f, hp, nullptr) && zdivide(g, hp, nullptr)) {
          out = std::move(hp);
          return true;
        }
      }
      ZPoly cf = zinterpolate(ff / h, x);
      if (!cf.empty()) {
        make_primitive(cf);
        ZPoly cand;
        if (zdivide(f, cf, &cand) && !cand.empty()) {
          make_primitive(cand);
          if (zdivide(g, cand, nullptr)) {
            out = std::move(cand);
            return true;
          }
        }
      }
    }
    x = x * 73794 * Integer(sqrt(Integer(sqrt(x)))) / 27011;
  }
  return false;
}

// Integer content (positive) of a polynomial with integer coefficients.
Integer int_content(const MPoly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
  return g;
}

// Scales p to integer coefficients with content one and positive leading term.
MPoly integer_primitive(const MPoly& p) {
  Integer den = 1, num = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational s(den, num);
  if (p.terms().front().coeff < 0) s = -s;
  return p * s;
}

Integer integer_max_norm(const MPoly& p) {
  Integer m = 0;
  for (const auto& t : p.terms()) {
    Integer a = abs(t.coeff.get_num());
    if (a > m) m = a;
  }
  return m;
}

// Expands each integer coefficient of h into symmetric x-adic digits in v.
MPoly zinterpolate_in(const MPoly& h, Var v, const Integer& x) {
  std::vector<Term> terms;
  for (const auto& t : h.terms()) {
    ZPoly digits = zinterpolate(t.coeff.get_num(), x);
    for (std::size_t k = 0; k < digits.size(); ++k) {
      if (digits[k] == 0) continue;
      terms.push_back({t.mono * Monomial::var(v, static_cast<unsigned>(k)), Rational(digits[k])});
    }
  }
  MPoly out(h.ring(), std::move(terms));
  if (out.is_zero()) return out;
  return integer_primitive(out);
}

// Heuristic gcd over Z of integer polynomials, content included; nullopt if it gives up.
std::optional<MPoly> heuristic_gcd(const MPoly& f, const MPoly& g) {
  const RingPtr& ring = f.ring();
  const Integer cf = int_content(f), cg = int_content(g);
  Integer c;
  mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  if (f.is_constant() || g.is_constant()) return MPoly(ring, Rational(c));
  const MPoly pf = f * Rational(1, cf), pg = g * Rational(1, cg);
  const std::uint32_t s = pf.support() | pg.support();
  if (__builtin_popcount(s) == 1) {
    const Var v = __builtin_ctz(s);
    ZPoly h;
    if (!heuristic_gcd(to_zpoly(pf, v), to_zpoly(pg, v), h)) return std::nullopt;
    std::vector<MPoly> cs;
    for (const auto& k : h) cs.push_back(MPoly(ring, Rational(k * c)));
    return MPoly::from_coefficients(ring, v, cs);
  }
  const Var v = 31 - __builtin_clz(s);
  const Integer nf = integer_max_norm(pf), ng = integer_max_norm(pg);
  const Integer b = 2 * std::min(nf, ng) + 29;
  const Integer rf = nf / abs(pf.terms().front().coeff.get_num());
  const Integer rg = ng / abs(pg.terms().front().coeff.get_num());
  const Integer lower = 2 * std::min(rf, rg) + 2;
  const Integer cap = Integer(99 * sqrt(b));
  Integer x = std::max(std::min(b, cap), lower);
  for (int attempt = 0; attempt < 6; ++attempt) {
    const MPoly fx = pf.evaluate(v, Rational(x)), gx = pg.evaluate(v, Rational(x));
    if (!fx.is_zero() && !gx.is_zero()) {
      auto h = heuristic_gcd(fx, gx);
      if (!h) return std::nullopt;
      MPoly cand = zinterpolate_in(*h, v, x);
      if (!cand.is_zero() && pf.divide_exact(cand) && pg.divide_exact(cand)) return cand * Rational(c);
      if (auto cff = fx.divide_exact(*h)) {
        MPoly co = zinterpolate_in(*cff, v, x);
        if (!co.is_zero()) {
          if (auto q = pf.divide_exact(co); q && !q->is_zero()) {
            MPoly cand2 = integer_primitive(*q);
            if (pg.divide_exact(cand2)) return cand2 * Rational(c);
          }
        }
      }
    }
    x = x * 73794 * Integer(sqrt(Integer(sqrt(x)))) / 27011;
  }
  return std::nullopt;
}

MPoly gcd_rec(const MPoly& p, const MPoly& q) {
  RingPtr ring = common_ring(p.ring(), q.ring());
  if (p.is_constant() || q.is_constant()) return MPoly(ring, 1);
  if (p.is_monomial()) return monomial_gcd(p, q);
  if (q.is_monomial()) return monomial_gcd(q, p);
  if (p == q) return p;
  const std::uint32_t sp = p.support(), sq = q.support();
  if (std::uint32_t only = sp & ~sq) {
    Var v = __builtin_ctz(only);
    return gcd_list(q, p.coefficients(v));
  }
  if (std::uint32_t only = sq & ~sp) {
    Var v = __builtin_ctz(only);
    return gcd_list(p, q.coefficients(v));
  }
  if (__builtin_popcount(sp) == 1) {
    const Var v = __builtin_ctz(sp);
    ZPoly h;
    if (heuristic_gcd(to_zpoly(p, v), to_zpoly(q, v), h)) {
      std::vector<MPoly> cs;
      for (const auto& c : h) cs.push_back(MPoly(ring, Rational(c)));
      return MPoly::from_coefficients(ring, v, cs);
    }
  }
  if (images_coprime(p, q, sp)) return MPoly(ring, 1);
  if (auto h = heuristic_gcd(integer_primitive(p), integer_primitive(q))) return *h;
  Var best = -1;
  unsigned best_deg = ~0u;
  for (std::uint32_t s = sp; s; s &= s - 1) {
    Var v = __builtin_ctz(s);
    unsigned d = std::max(p.degree(v), q.degree(v));
    if (d < best_deg) {
      best_deg = d;
      best = v;
    }
  }
  auto cp_list = p.coefficients(best);
  auto cq_list = q.coefficients(best);
  MPoly cp = gcd_list(MPoly(ring), cp_list);
  MPoly cq = gcd_list(MPoly(ring), cq_list);
  MPoly c = gcd_rec(cp, cq);
  MPoly g = prs_gcd(p / cp, q / cq, best);
  return c * g;
}

}  // namespace

MPoly gcd(const MPoly& p, const MPoly& q) {
  if (p.is_zero() && q.is_zero()) throw BothZero();
  RingPtr ring = common_ring(p.ring(), q.ring());
  if (p.is_zero()) return q.canonical().with_ring(ring);
  if (q.is_zero()) return p.canonical().with_ring(ring);
  return gcd_rec(p, q).canonical().with_ring(ring);
}

MPoly content(const MPoly& p, Var v) {
  if (p.is_zero()) return p;
  return gcd_list(MPoly(p.ring()), p.coefficients(v)).canonical();
}

MPoly primitive_part(const MPoly& p, Var v) {
  if (p.is_zero()) return p;
  return p / content(p, v);
}

MPoly SqfFactorization::expand() const {
  MPoly r = MPoly::constant(unit);
  for (const auto& [f, k] : factors) r *= f.pow(k);
  return r;
}

namespace {

// Yun's algorithm for p primitive in v with positive degree.
std::vector<std::pair<MPoly, unsigned>> yun(const MPoly& p, Var v) {
  std::vector<std::pair<MPoly, unsigned>> out;
  MPoly dp = p.derivative(v);
  MPoly g = gcd(p, dp);
  MPoly c = p / g;
  MPoly d = dp / g - c.derivative(v);
  unsigned i = 1;
  while (c.depends_on(v)) {
    MPoly a = gcd(c, d);
    if (a.depends_on(v)) out.emplace_back(a, i);
    c = c / a;
    d = d / a - c.derivative(v);
    ++i;
  }
  return out;
}

}  // namespace

SqfFactorization squarefree_factorization(const MPoly& p, Var v) {
  if (p.is_zero()) throw ZeroInput("squarefree factorization of zero");
  SqfFactorization s;
  MPoly c = content(p, v);
  if (!c.is_constant()) s.factors.emplace_back(c, 1);
  if (p.depends_on(v)) {
    for (auto& f : yun(p / c, v)) s.factors.push_back(std::move(f));
  }
  Rational lc = 1;
  for (const auto& [f, k] : s.factors) {
    Rational l = f.leading_coeff();
    for (unsigned i = 0; i < k; ++i) lc *= l;
  }
  s.unit = p.leading_coeff() / lc;
  return s;
}

SqfFactorization squarefree_full(const MPoly& p) {
  if (p.is_zero()) throw ZeroInput("squarefree factorization of zero");
  SqfFactorization s;
  if (p.is_constant()) {
    s.unit = p.constant_value();
    return s;
  }
  Var v = __builtin_ctz(p.support());
  MPoly c = content(p, v);
  std::map<unsigned, MPoly> by_mult;
  for (auto& [f, k] : yun(p / c, v)) by_mult.emplace(k, f);
  SqfFactorization rest = squarefree_full(c);
  for (auto& [f, k] : rest.factors) {
    auto it = by_mult.find(k);
    if (it == by_mult.end()) {
      by_mult.emplace(k, f);
    } else {
      it->second = it->second * f;
    }
  }
  for (auto& [k, f] : by_mult) s.factors.emplace_back(f, k);
  Rational lc = 1;
  for (const auto& [f, k] : s.factors) {
    Rational l = f.leading_coeff();
    for (unsigned i = 0; i < k; ++i) lc *= l;
  }
  s.unit = p.leading_coeff() / lc;
  return s;
}

MPoly squarefree_part(const MPoly& p) {
  MPoly r = MPoly::constant(1).with_ring(p.ring());
  for (const auto& [f, k] : squarefree_full(p).factors) r *= f;
  return r.canonical();
}

MPoly pseudo_remainder(const MPoly& p, const MPoly& q, Var v) {
  if (q.is_zero()) throw ZeroDenominator();
  UPoly a = to_upoly(p, v), b = to_upoly(q, v);
  RingPtr ring = common_ring(p.ring(), q.ring());
  if (udeg(a) < udeg(b)) return p;
  return from_upoly(ring, uprem(a, b), v);
}

MPoly resultant(const MPoly& p, const MPoly& q, Var v) {
  if (p.is_zero() || q.is_zero()) throw NotPolynomialInVar("resultant of a zero polynomial");
  RingPtr ring = common_ring(p.ring(), q.ring());
  UPoly a = to_upoly(p, v), b = to_upoly(q, v);
  int s = 1;
  if (udeg(a) < udeg(b)) {
    std::swap(a, b);
    if ((udeg(a) * udeg(b)) % 2) s = -1;
  }
  if (udeg(b) == 0) return b[0].pow(static_cast<unsigned>(udeg(a))) * Rational(s);
  MPoly g(ring, 1), h(ring, 1);
  while (true) {
    const int da = udeg(a), db = udeg(b);
    const int delta = da - db;
    if (da % 2 && db % 2) s = -s;
    UPoly r = uprem(a, b);
    if (r.empty()) return MPoly(ring);
    a = std::move(b);
    b = udiv_exact(r, g * h.pow(static_cast<unsigned>(delta)));
    g = a.back();
    if (delta > 0) h = g.pow(static_cast<unsigned>(delta)) / h.pow(static_cast<unsigned>(delta - 1));
    if (udeg(b) == 0) {
      const unsigned dA = static_cast<unsigned>(udeg(a));
      MPoly res = b[0].pow(dA);
      if (dA > 1) res = res / h.pow(dA - 1);
      return res * Rational(s);
    }
  }
}

MPoly subresultant(const MPoly& p, const MPoly& q, Var v, unsigned j) {
  RingPtr ring = common_ring(p.ring(), q.ring());
  UPoly a = to_upoly(p, v), b = to_upoly(q, v);
  const int n = udeg(a), m = udeg(b);
  if (m < 0 || n <= m || static_cast<int>(j) > m) {
    throw PreconditionViolated("subresultant needs deg p > deg q >= j");
  }
  const int J = static_cast<int>(j);
  const int rows = n + m - 2 * J;
  const int cols = n + m - J;
  std::vector<std::vector<MPoly>> mat(static_cast<std::size_t>(rows), std::vector<MPoly>(static_cast<std::size_t>(cols), MPoly(ring)));
  auto place = [&](int row, const UPoly& poly, int shift) {
    for (int k = 0; k < static_cast<int>(poly.size()); ++k) {
      int power = k + shift;
      int col = cols - 1 - power;
      mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = poly[static_cast<std::size_t>(k)];
    }
  };
  int row = 0;
  for (int s = m - J - 1; s >= 0; --s) place(row++, a, s);
  for (int s = n - J - 1; s >= 0; --s) place(row++, b, s);

  int sign = 1;
  MPoly prev(ring, 1);
  for (int k = 0; k < rows - 1; ++k) {
    auto K = static_cast<std::size_t>(k);
    if (mat[K][K].is_zero()) {
      int swap_with = -1;
      for (int i = k + 1; i < rows; ++i) {
        if (!mat[static_cast<std::size_t>(i)][K].is_zero()) {
          swap_with = i;
          break;
        }
      }
      if (swap_with < 0) return MPoly(ring);
      std::swap(mat[K], mat[static_cast<std::size_t>(swap_with)]);
      sign = -sign;
    }
    for (int i = k + 1; i < rows; ++i) {
      auto I = static_cast<std::size_t>(i);
      for (int c = k + 1; c < cols; ++c) {
        auto C = static_cast<std::size_t>(c);
        mat[I][C] = (mat[K][K] * mat[I][C] - mat[I][K] * mat[K][C]) / prev;
      }
      mat[I][K] = MPoly(ring);
    }
    prev = mat[K][K];
  }
  UPoly out(j + 1, MPoly(ring));
  const auto last = static_cast<std::size_t>(rows - 1);
  for (int c = rows - 1; c < cols; ++c) {
    int power = cols - 1 - c;
    out[static_cast<std::size_t>(power)] = mat[last][static_cast<std::size_t>(c)] * Rational(sign);
  }
  return from_upoly(ring, out, v);
}

bool is_homogeneous(const MPoly& p) {
  if (p.is_zero()) return true;
  const auto d = p.leading_mono().total;
  for (const auto& t : p.terms()) {
    if (t.mono.total != d) return false;
  }
  return true;
}

}  // namespace formint
