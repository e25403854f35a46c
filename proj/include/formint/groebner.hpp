#pragma once

#include <vector>

#include "formint/mpoly.hpp"

namespace formint {

/// Reduced grevlex Groebner basis. Each basis element remembers how it is
/// built from the input generators: gens[k] = sum_i cofactors[k][i] * input[i].
struct GBasis {
  std::vector<MPoly> input;
  std::vector<MPoly> gens;
  std::vector<std::vector<MPoly>> cofactors;
  bool reduced = true;
};

/// Buchberger's algorithm with the product and chain criteria.
GBasis groebner_basis(const std::vector<MPoly>& gens);

struct NormalForm {
  MPoly remainder;
  /// p = sum_i quotients[i] * G.input[i] + remainder.
  std::vector<MPoly> quotients;
};

NormalForm normal_form(const MPoly& p, const GBasis& G);

/// The Jacobian ideal of a homogeneous Q has finite colength, i.e. Q = 0 is
/// a smooth hypersurface. Throws NotHomogeneous.
bool is_smooth(const MPoly& Q);

/// Jacobian generators dQ/dx_0, ..., dQ/dx_{n-1} over the first n ring variables.
std::vector<MPoly> jacobian(const MPoly& Q, int n);

}  // namespace formint
