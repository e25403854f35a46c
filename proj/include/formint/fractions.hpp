#pragma once

#include <vector>

#include "formint/kpoly.hpp"

namespace formint {

struct PartialFractionTerm {
  MPoly denfactor;  // squarefree factor of the denominator, canonical
  unsigned power;
  RatFunc numerator;  // degree in var below that of denfactor
};

struct PartialFractions {
  RatFunc polypart;
  std::vector<PartialFractionTerm> terms;

  RatFunc recombine() const;
};

/// Partial fractions of `f` with respect to `var` over the squarefree
/// factors of its denominator.
PartialFractions partial_fractions(const RatFunc& f, Var var);

/// Sum of num(c)/den(c) over the roots c of `R` (squarefree in `z`), each
/// root counted once. Throws NonInvertibleDenominator when den shares a root
/// with R.
RatFunc trace_sum(const MPoly& R, const MPoly& num, const MPoly& den, Var z);

/// Power sums p_0..p_{n-1} of the roots of `R` in `z`.
std::vector<RatFunc> power_sums(const MPoly& R, Var z);

}  // namespace formint
