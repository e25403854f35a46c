#include "formint/forms.hpp"

#include "formint/errors.hpp"

namespace formint {

std::vector<int> basis_indices(Basis b) {
  std::vector<int> out;
  for (; b; b &= b - 1) out.push_back(__builtin_ctz(b));
  return out;
}

int wedge_sign(Basis a, Basis b) {
  if (a & b) return 0;
  int inversions = 0;
  for (Basis s = b; s; s &= s - 1) {
    int j = __builtin_ctz(s);
    inversions += __builtin_popcount(a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

DiffForm::DiffForm(RingPtr ring, int nvars, int degree) : ring_(std::move(ring)), nvars_(nvars), degree_(degree) {
  if (nvars < 0 || static_cast<std::size_t>(nvars) > kMaxVars || (ring_ && static_cast<std::size_t>(nvars) > ring_->size())) {
    throw PreconditionViolated("invalid number of form variables");
  }
  if (degree < 0) throw PreconditionViolated("negative form degree");
}

DiffForm DiffForm::scalar(RingPtr ring, int nvars, const RatFunc& f) {
  DiffForm w(std::move(ring), nvars, 0);
  w.add(0, f);
  return w;
}

DiffForm DiffForm::monomial(RingPtr ring, int nvars, const std::vector<int>& indices, const RatFunc& coeff) {
  DiffForm w(std::move(ring), nvars, static_cast<int>(indices.size()));
  Basis b = 0;
  int sign = 1;
  for (int i : indices) {
    if (i < 0 || i >= nvars) throw IndexOutOfRange("form index out of range");
    Basis bit = Basis{1} << i;
    int s = wedge_sign(b, bit);
    if (s == 0) return w;
    sign *= s;
    b |= bit;
  }
  w.add(b, coeff * Rational(sign));
  return w;
}

RatFunc DiffForm::coeff(Basis b) const {
  auto it = c_.find(b);
  return it == c_.end() ? RatFunc(MPoly(ring_)) : it->second;
}

void DiffForm::add(Basis b, const RatFunc& f) {
  if (f.is_zero()) return;
  if (basis_degree(b) != degree_) throw InternalAssertion("basis degree does not match form degree");
  if (nvars_ < 32 && (b >> nvars_) != 0) throw IndexOutOfRange("basis element outside the form variables");
  auto it = c_.find(b);
  if (it == c_.end()) {
    c_.emplace(b, f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) c_.erase(it);
}

DiffForm DiffForm::operator+(const DiffForm& o) const {
  if (o.degree_ != degree_ && !o.is_zero() && !is_zero()) throw PreconditionViolated("adding forms of different degree");
  DiffForm r = is_zero() && !o.is_zero() ? DiffForm(o.ring_ ? o.ring_ : ring_, std::max(nvars_, o.nvars_), o.degree_)
                                         : DiffForm(ring_ ? ring_ : o.ring_, std::max(nvars_, o.nvars_), degree_);
  r.c_ = c_;
  for (const auto& [b, f] : o.c_) r.add(b, f);
  return r;
}

DiffForm DiffForm::operator-() const {
  DiffForm r = *this;
  for (auto& [b, f] : r.c_) f = -f;
  return r;
}

DiffForm DiffForm::operator-(const DiffForm& o) const { return *this + (-o); }

DiffForm DiffForm::operator*(const RatFunc& f) const {
  DiffForm r(ring_, nvars_, degree_);
  if (f.is_zero()) return r;
  for (const auto& [b, g] : c_) r.c_.emplace(b, g * f);
  return r;
}

bool DiffForm::operator==(const DiffForm& o) const {
  if (is_zero() && o.is_zero()) return true;
  return degree_ == o.degree_ && c_ == o.c_;
}

DiffForm DiffForm::with_nvars(int nvars) const {
  DiffForm r(ring_, nvars, degree_);
  for (const auto& [b, f] : c_) r.add(b, f);
  return r;
}

bool DiffForm::free_of(int v) const {
  for (const auto& [b, f] : c_) {
    if ((b >> v) & 1u) return false;
    if (f.depends_on(v)) return false;
  }
  return true;
}

std::string DiffForm::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, f] : c_) {
    std::string cs = f.to_string();
    if (f.is_polynomial() && f.num().size() > 1) cs = "(" + cs + ")";
    bool neg = cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (b == 0) {
      out += cs;
      continue;
    }
    if (cs != "1") out += cs + "*";
    out += "d(";
    bool firstv = true;
    for (int i : basis_indices(b)) {
      out += (firstv ? "" : ",") + (ring_ ? ring_->name(i) : "x" + std::to_string(i));
      firstv = false;
    }
    out += ")";
  }
  return out;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  RingPtr ring = common_ring(a.ring(), b.ring());
  DiffForm r(ring, std::max(a.nvars(), b.nvars()), a.degree() + b.degree());
  for (const auto& [ba, fa] : a.terms()) {
    for (const auto& [bb, fb] : b.terms()) {
      int s = wedge_sign(ba, bb);
      if (s) r.add(ba | bb, fa * fb * Rational(s));
    }
  }
  return r;
}

namespace {

DiffForm derivative_range(const DiffForm& w, int lo, int hi) {
  DiffForm r(w.ring(), w.nvars(), w.degree() + 1);
  for (const auto& [b, f] : w.terms()) {
    for (int l = lo; l < hi; ++l) {
      Basis bit = Basis{1} << l;
      if (b & bit) continue;
      if (!f.depends_on(l)) continue;
      r.add(b | bit, f.derivative(l) * Rational(wedge_sign(bit, b)));
    }
  }
  return r;
}

}  // namespace

DiffForm exterior_derivative(const DiffForm& w) { return derivative_range(w, 0, w.nvars()); }

DiffForm truncated_derivative(const DiffForm& w, int s, TruncMode mode) {
  if (s < 1 || s > w.nvars()) throw IndexOutOfRange("truncation index out of range");
  return mode == TruncMode::Single ? derivative_range(w, s - 1, s) : derivative_range(w, 0, s);
}

ClosedCheck is_closed(const DiffForm& w) {
  ClosedCheck c;
  DiffForm dw = exterior_derivative(w);
  if (!dw.is_zero()) {
    c.closed = false;
    c.witness_basis = dw.terms().begin()->first;
    c.witness = dw.terms().begin()->second;
  }
  return c;
}

void require_closed(const DiffForm& w) {
  auto c = is_closed(w);
  if (!c.closed) {
    std::vector<int> idx;
    for (int i : basis_indices(c.witness_basis)) idx.push_back(i + 1);
    throw NotClosed(idx, c.witness.to_string());
  }
}

TopSplit decompose_top(const DiffForm& w) {
  const int m = w.nvars();
  if (m == 0) return {w, DiffForm(w.ring(), m, 0)};
  const Basis top = Basis{1} << (m - 1);
  TopSplit s{DiffForm(w.ring(), m, w.degree()), DiffForm(w.ring(), m, std::max(0, w.degree() - 1))};
  for (const auto& [b, f] : w.terms()) {
    if (b & top) {
      // dx_I ^ dx_m has the indices already sorted, so the sign is +1.
      s.mu.add(b & ~top, f);
    } else {
      s.rest.add(b, f);
    }
  }
  return s;
}

DiffForm top_factor_leading(const DiffForm& w) {
  DiffForm mu = decompose_top(w).mu;
  return (w.degree() - 1) % 2 ? -mu : mu;
}

}  // namespace formint
