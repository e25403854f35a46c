#pragma once

#include "formint/forms.hpp"
#include "formint/univariate.hpp"

namespace formint {

struct HermiteOneFormResult {
  RatFunc g;
  DiffForm tilde;  // closed, each coefficient with squarefree denominator
};

/// Splits a closed 1-form as dg + tilde; w is exact iff tilde is zero.
/// Throws NotClosed.
HermiteOneFormResult hermite_one_form(const DiffForm& w);

/// Complete primitive g + sum of logs of a closed 1-form. The residues of
/// every log term are constants (free of the form variables).
Primitive integrate_closed_1form(const DiffForm& w);

bool is_exact_rational(const DiffForm& w);

/// d(P) as a 1-form in the first `nvars` variables. Throws ResidualLogarithm
/// when the residues of the log terms are not constant.
DiffForm primitive_differential(const Primitive& P, const RingPtr& ring, int nvars);

}  // namespace formint
