#include "formint/mpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "formint/errors.hpp"

namespace formint {

namespace {

bool term_order(const Term& a, const Term& b) { return grevlex_greater(a.mono, b.mono); }

// Sorts and merges like terms, dropping zeros.
void normalize_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_order);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Rational c = terms[i].coeff;
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      c += terms[j].coeff;
      ++j;
    }
    if (c != 0) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = c;
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

void check_var(const RingPtr& ring, Var v) {
  if (v < 0 || static_cast<std::size_t>(v) >= kMaxVars || (ring && static_cast<std::size_t>(v) >= ring->size())) {
    throw PreconditionViolated("variable index out of range");
  }
}

}  // namespace

RingPtr common_ring(const RingPtr& a, const RingPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (!(*a == *b)) throw RingMismatch();
  return a;
}

MPoly::MPoly(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

MPoly::MPoly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize_terms(terms_);
}

MPoly MPoly::var(RingPtr ring, Var v, unsigned power) {
  check_var(ring, v);
  return monomial(std::move(ring), Monomial::var(v, power), 1);
}

MPoly MPoly::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  MPoly p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

MPoly MPoly::with_ring(RingPtr ring) const {
  MPoly p = *this;
  p.ring_ = std::move(ring);
  return p;
}

Rational MPoly::constant_value() const {
  if (!is_constant()) throw PreconditionViolated("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

unsigned MPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.total; }

unsigned MPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[v]);
  return d;
}

unsigned MPoly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  unsigned d = ~0u;
  for (const auto& t : terms_) d = std::min(d, t.mono[v]);
  return d;
}

bool MPoly::depends_on(Var v) const {
  for (const auto& t : terms_) {
    if (t.mono[v] != 0) return true;
  }
  return false;
}

std::uint32_t MPoly::support() const {
  std::uint32_t s = 0;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (t.mono.exp[i]) s |= (1u << i);
    }
  }
  return s;
}

std::vector<MPoly> MPoly::coefficients(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) {
    Term u = t;
    unsigned k = u.mono.exp[static_cast<std::size_t>(v)];
    u.mono.exp[static_cast<std::size_t>(v)] = 0;
    u.mono.total -= k;
    buckets[k].push_back(std::move(u));
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    // Removing one variable keeps grevlex order among the survivors only up to
    // ties, so re-sort.
    out.emplace_back(ring_, std::move(b));
  }
  return out;
}

MPoly MPoly::from_coefficients(const RingPtr& ring, Var v, const std::vector<MPoly>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms()) {
      Term u = t;
      u.mono.exp[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(u.mono.exp[static_cast<std::size_t>(v)] + k);
      u.mono.total += static_cast<std::uint32_t>(k);
      terms.push_back(std::move(u));
    }
  }
  RingPtr r = ring;
  for (const auto& c : coeffs) r = common_ring(r, c.ring());
  return MPoly(r, std::move(terms));
}

MPoly MPoly::coefficient(Var v, unsigned k) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    if (t.mono[v] == k) {
      Term u = t;
      u.mono.exp[static_cast<std::size_t>(v)] = 0;
      u.mono.total -= k;
      terms.push_back(std::move(u));
    }
  }
  return MPoly(ring_, std::move(terms));
}

MPoly MPoly::leading_coefficient(Var v) const { return coefficient(v, degree(v)); }

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r(common_ring(ring_, o.ring_));
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const Term& a = terms_[i];
    const Term& b = o.terms_[j];
    if (a.mono == b.mono) {
      Rational c = a.coeff + b.coeff;
      if (c != 0) r.terms_.push_back({a.mono, std::move(c)});
      ++i;
      ++j;
    } else if (grevlex_greater(a.mono, b.mono)) {
      r.terms_.push_back(a);
      ++i;
    } else {
      r.terms_.push_back(b);
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  RingPtr ring = common_ring(ring_, o.ring_);
  if (terms_.empty() || o.terms_.empty()) return MPoly(ring);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coeff).with_ring(ring);
  if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coeff).with_ring(ring);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
  return MPoly(ring, std::move(prod));
}

MPoly MPoly::operator*(const Rational& c) const {
  if (c == 0) return MPoly(ring_);
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MPoly MPoly::mul_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return MPoly(ring_);
  MPoly r = *this;
  for (auto& t : r.terms_) {
    t.mono = t.mono * m;
    t.coeff *= c;
  }
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(ring_, Rational(1));
  MPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
  if (d.is_zero()) throw ZeroDenominator();
  RingPtr ring = common_ring(ring_, d.ring_);
  if (is_zero()) return MPoly(ring);
  if (d.is_constant()) return (*this * (1 / d.constant_value())).with_ring(ring);
  const Term& lead = d.terms_.front();
  if (d.terms_.size() == 1) {
    MPoly q(ring);
    q.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!lead.mono.divides(t.mono)) return std::nullopt;
      q.terms_.push_back({t.mono / lead.mono, t.coeff / lead.coeff});
    }
    return q;
  }
  // Quick degree rejections.
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (d.degree(static_cast<Var>(v)) > degree(static_cast<Var>(v))) return std::nullopt;
  }
  // Remainder kept in an ordered map so each step only touches the terms of d.
  auto greater = [](const Monomial& a, const Monomial& b) { return grevlex_greater(a, b); };
  std::map<Monomial, Rational, decltype(greater)> rem(greater);
  for (const auto& t : terms_) rem.emplace(t.mono, t.coeff);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lead.mono.divides(top->first)) return std::nullopt;
    Monomial qm = top->first / lead.mono;
    Rational qc = top->second / lead.coeff;
    rem.erase(top);
    for (std::size_t i = 1; i < d.terms_.size(); ++i) {
      const Term& dt = d.terms_[i];
      auto [it, fresh] = rem.try_emplace(qm * dt.mono);
      it->second -= qc * dt.coeff;
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back({std::move(qm), std::move(qc)});
  }
  MPoly q(ring);
  q.terms_ = std::move(quotient);  // generated in decreasing order
  return q;
}

MPoly MPoly::operator/(const MPoly& d) const {
  auto q = divide_exact(d);
  if (!q) throw InternalAssertion("inexact polynomial division");
  return *q;
}

MPoly MPoly::derivative(Var v) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  auto vi = static_cast<std::size_t>(v);
  for (const auto& t : terms_) {
    unsigned e = t.mono.exp[vi];
    if (e == 0) continue;
    Term u = t;
    u.mono.exp[vi] = static_cast<std::uint16_t>(e - 1);
    u.mono.total -= 1;
    u.coeff *= e;
    out.push_back(std::move(u));
  }
  MPoly r(ring_);
  r.terms_ = std::move(out);
  // Differentiating in one variable preserves the relative grevlex order of
  // the surviving terms except in tie situations, so normalise.
  normalize_terms(r.terms_);
  return r;
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
  auto cs = coefficients(v);
  RingPtr ring = common_ring(ring_, value.ring());
  MPoly acc(ring);
  for (std::size_t k = cs.size(); k-- > 0;) {
    acc = acc * value + cs[k];
  }
  return acc.with_ring(ring);
}

MPoly MPoly::evaluate(Var v, const Rational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  auto vi = static_cast<std::size_t>(v);
  for (const auto& t : terms_) {
    unsigned e = t.mono.exp[vi];
    Term u = t;
    if (e) {
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), value.get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), value.get_den_mpz_t(), e);
      u.coeff *= p;
      u.mono.exp[vi] = 0;
      u.mono.total -= e;
    }
    out.push_back(std::move(u));
  }
  return MPoly(ring_, std::move(out));
}

Rational MPoly::canonical_scale() const {
  if (terms_.empty()) return 1;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational s(den_lcm, num_gcd);
  s.canonicalize();
  if (terms_.front().coeff < 0) s = -s;
  return s;
}

MPoly MPoly::canonical() const { return *this * canonical_scale(); }

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  return *this * (1 / leading_coeff());
}

bool MPoly::operator==(const MPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

int MPoly::compare(const MPoly& a, const MPoly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Term& x = a.terms_[i];
    const Term& y = b.terms_[i];
    if (x.mono != y.mono) return grevlex_greater(x.mono, y.mono) ? 1 : -1;
    if (x.coeff != y.coeff) return x.coeff > y.coeff ? 1 : -1;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() > b.terms_.size() ? 1 : -1;
  return 0;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (c < 0) {
      out << '-';
      c = -c;
    } else if (!first) {
      out << '+';
    }
    first = false;
    bool need_star = false;
    if (c != 1 || t.mono.is_one()) {
      out << format_rational(c);
      need_star = true;
    }
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      unsigned e = t.mono.exp[v];
      if (!e) continue;
      if (need_star) out << '*';
      out << (ring_ ? ring_->name(static_cast<Var>(v)) : "v" + std::to_string(v));
      if (e > 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace formint
