#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "formint/ratfunc.hpp"

namespace formint {

/// Set of form-variable indices i1 < ... < ip, bit i for dx_i.
using Basis = std::uint32_t;

inline int basis_degree(Basis b) { return __builtin_popcount(b); }
std::vector<int> basis_indices(Basis b);

/// Sign of dx_a ^ dx_b relative to dx_(a|b); zero when they overlap.
int wedge_sign(Basis a, Basis b);

/// Exterior form of fixed degree over the rational functions of a form ring.
/// The first `nvars` ring variables are the form variables; any further
/// variables (the parameter t, the root variable) are constants for d.
class DiffForm {
 public:
  DiffForm() = default;
  DiffForm(RingPtr ring, int nvars, int degree);

  static DiffForm scalar(RingPtr ring, int nvars, const RatFunc& f);
  /// coeff * dx_{i1} ^ ... ^ dx_{ip} for arbitrary (possibly unsorted) indices.
  static DiffForm monomial(RingPtr ring, int nvars, const std::vector<int>& indices, const RatFunc& coeff);

  const RingPtr& ring() const { return ring_; }
  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const std::map<Basis, RatFunc>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  RatFunc coeff(Basis b) const;
  void add(Basis b, const RatFunc& f);

  DiffForm operator+(const DiffForm& o) const;
  DiffForm operator-(const DiffForm& o) const;
  DiffForm operator-() const;
  DiffForm operator*(const RatFunc& f) const;
  bool operator==(const DiffForm& o) const;
  bool operator!=(const DiffForm& o) const { return !(*this == o); }

  /// Same coefficients viewed with a different number of form variables.
  DiffForm with_nvars(int nvars) const;
  /// True iff no coefficient depends on x_v and no basis element contains dx_v.
  bool free_of(int v) const;

  /// Parser-compatible text, e.g. "t/x*d(x) + (t^2+1)/z*d(z)".
  std::string to_string() const;

 private:
  RingPtr ring_;
  int nvars_ = 0;
  int degree_ = 0;
  std::map<Basis, RatFunc> c_;
};

DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm exterior_derivative(const DiffForm& w);

enum class TruncMode { Single, Prefix };
/// Single: d^s(w) = sum of d(coeff)/dx_s dx_s ^ dx_I. Prefix: d_s = d^1 + ... + d^s.
/// `s` is 1-based as in the usual notation.
DiffForm truncated_derivative(const DiffForm& w, int s, TruncMode mode);

struct ClosedCheck {
  bool closed = true;
  Basis witness_basis = 0;
  RatFunc witness;
};
ClosedCheck is_closed(const DiffForm& w);
/// Throws NotClosed with the witness when w is not closed.
void require_closed(const DiffForm& w);

struct TopSplit {
  DiffForm rest;  // free of dx_m
  DiffForm mu;    // degree p-1, free of dx_m
};
/// w = rest + mu ^ dx_m, with x_m the last form variable.
TopSplit decompose_top(const DiffForm& w);
/// The form A with w - rest = dx_m ^ A, i.e. A = (-1)^(p-1) mu.
DiffForm top_factor_leading(const DiffForm& w);

}  // namespace formint
