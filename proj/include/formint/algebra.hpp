#pragma once

#include <utility>
#include <vector>

#include "formint/mpoly.hpp"

namespace formint {

/// Canonical greatest common divisor (integral, content one, positive
/// leading coefficient). Throws BothZero when both inputs vanish.
MPoly gcd(const MPoly& p, const MPoly& q);

/// Canonical gcd of the coefficients of `p` viewed as a polynomial in `v`.
MPoly content(const MPoly& p, Var v);
MPoly primitive_part(const MPoly& p, Var v);

struct SqfFactorization {
  Rational unit = 1;
  /// Pairwise coprime factors with their multiplicities.
  std::vector<std::pair<MPoly, unsigned>> factors;

  MPoly expand() const;
};

/// Yun decomposition with respect to `v`. A nonconstant content in `v`
/// becomes its own factor of multiplicity one, listed first.
SqfFactorization squarefree_factorization(const MPoly& p, Var v);

/// Squarefree decomposition with respect to all variables at once.
SqfFactorization squarefree_full(const MPoly& p);

/// Squarefree part of `p` in all variables, canonical.
MPoly squarefree_part(const MPoly& p);

/// Resultant in `v` by the subresultant remainder sequence.
MPoly resultant(const MPoly& p, const MPoly& q, Var v);

/// The j-th subresultant of `p` and `q` with respect to `v`, where
/// deg_v(p) > deg_v(q) >= j. Computed by fraction-free elimination on the
/// Sylvester matrix; for j = 0 this equals the resultant.
MPoly subresultant(const MPoly& p, const MPoly& q, Var v, unsigned j);

/// lc_v(q)^(deg p - deg q + 1) * p mod q.
MPoly pseudo_remainder(const MPoly& p, const MPoly& q, Var v);

bool is_homogeneous(const MPoly& p);

}  // namespace formint
