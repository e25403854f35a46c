#include "formint/monomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "formint/errors.hpp"

namespace formint {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) {
    throw PreconditionViolated("at most " + std::to_string(kMaxVars) + " ring variables are supported");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw PreconditionViolated("duplicate variable name '" + names_[i] + "'");
    }
  }
  param_ = index_of(kParamName);
  root_ = index_of(kRootName);
}

Var Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Var>(i);
  }
  return -1;
}

RingPtr make_ring(std::vector<std::string> names) { return std::make_shared<const Ring>(std::move(names)); }

RingPtr make_form_ring(const std::vector<std::string>& form_vars) {
  std::vector<std::string> names = form_vars;
  for (const auto& n : form_vars) {
    if (n == kParamName || n == kRootName) {
      throw PreconditionViolated("'" + n + "' is reserved and cannot be a form variable");
    }
  }
  names.emplace_back(kParamName);
  names.emplace_back(kRootName);
  return make_ring(std::move(names));
}

Monomial Monomial::var(Var v, unsigned power) {
  Monomial m;
  m.exp[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(power);
  m.total = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exp[i]) + o.exp[i];
    if (e > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(e);
  }
  r.total = total + o.total;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (total > o.total) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp[i] > o.exp[i]) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] - o.exp[i]);
  r.total = total - o.total;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp[i] = std::max(exp[i], o.exp[i]);
    r.total += r.exp[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp[i] = std::min(exp[i], o.exp[i]);
    r.total += r.exp[i];
  }
  return r;
}

Var Monomial::pure_power_var() const {
  if (total == 0) return -1;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp[i] != 0) return exp[i] == total ? static_cast<Var>(i) : -1;
  }
  return -1;
}

}  // namespace formint
