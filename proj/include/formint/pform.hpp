#pragma once

#include <map>

#include "formint/forms.hpp"
#include "formint/univariate.hpp"

namespace formint {

/// A (p-1)-form whose coefficients are rational functions plus sums of
/// logarithms; the residues of a log term in x_i may depend on x_1..x_{i-1}.
struct PrimitiveForm {
  RingPtr ring;
  int nvars = 0;
  int degree = 0;
  std::map<Basis, Primitive> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  /// Adds p to the coefficient of dx_b.
  void add(Basis b, const Primitive& p);
};

/// Psi with d(Psi) = w for a closed p-form w, p >= 1, eliminating the form
/// variables from the last one down. Throws NotClosed.
PrimitiveForm integrate_closed_pform(const DiffForm& w);

/// d(P) computed formally; the logarithms produced by differentiating
/// non-constant residues must cancel, otherwise ResidualLogarithm.
DiffForm expand_primitive_derivative(const PrimitiveForm& P);

}  // namespace formint
