#pragma once

#include <optional>
#include <string>
#include <vector>

#include "formint/forms.hpp"

namespace formint {

/// Linear differential operator sum a_i(t) Dt^i with a_i rational in the
/// ring's parameter t.
class OreOp {
 public:
  OreOp() = default;
  explicit OreOp(std::vector<RatFunc> coeffs);
  static OreOp identity();
  /// Dt itself.
  static OreOp dt();

  const std::vector<RatFunc>& coeffs() const { return c_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  RatFunc coeff(int i) const;

  bool operator==(const OreOp& o) const { return c_ == o.c_; }

  /// e.g. "(t^4-1)*Dt^2 + (-2*t^3-2*t)*Dt + (2*t^2+2)".
  std::string to_string() const;

 private:
  std::vector<RatFunc> c_;
};

/// a o b, using Dt * c = c * Dt + c'.
OreOp ore_multiply(const OreOp& a, const OreOp& b, Var t);
/// sum a_i * d^i f / dt^i.
RatFunc ore_apply(const OreOp& L, const RatFunc& f, Var t);
DiffForm ore_apply(const OreOp& L, const DiffForm& w, Var t);

/// Clears denominators, removes the polynomial content in t and makes the
/// leading coefficient positive; returns the factor lambda with result = lambda * L.
OreOp normalize_operator(const OreOp& L, Var t, RatFunc* lambda = nullptr);
/// Same, but only rational content and sign are removed.
OreOp normalize_operator_numeric(const OreOp& L, Var t, RatFunc* lambda = nullptr);

struct Telescoped {
  OreOp L;
  RatFunc certificate;
};

/// Minimal telescoper of f with respect to x: L(f) = d(certificate)/dx.
Telescoped min_telescoper_bivariate(const RatFunc& f, Var x);

/// Minimal telescoper of a closed rational 1-form with parameter t:
/// L(w) = d(certificate). Throws NotClosed.
Telescoped ct_one_form(const DiffForm& w);

/// L(w) == d(g).
bool verify_telescoper(const OreOp& L, const DiffForm& w, const RatFunc& g);

/// True iff some nonzero operator of order < r telescopes w.
bool has_telescoper_below(const DiffForm& w, int r);

}  // namespace formint
