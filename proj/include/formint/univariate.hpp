#pragma once

#include <vector>

#include "formint/ratfunc.hpp"

namespace formint {

/// Sum over the roots c of `respoly` (in the ring's root variable) of
/// c * log(argpoly(c, .)). `argpoly` has positive degree in `var`; its
/// denominator is free of `var` and of the root variable.
struct LogTerm {
  MPoly respoly;
  RatFunc argpoly;
  Var var = -1;

  bool operator==(const LogTerm& o) const {
    return var == o.var && respoly == o.respoly && argpoly == o.argpoly;
  }
};

/// rational + sum of log terms.
struct Primitive {
  RatFunc rational;
  std::vector<LogTerm> logs;
};

/// How the argument of a logarithm is scaled once it is reduced modulo the
/// residue polynomial.
enum class ArgNormalization {
  Monic,      // leading coefficient in the integration variable is one
  Primitive,  // polynomial, content free, positive leading coefficient
};

struct HermiteResult {
  RatFunc g;
  RatFunc h;
};

/// A/D = d(g)/d(var) + h with the denominator of h squarefree in `var` and
/// of larger degree than its numerator.
HermiteResult hermite_rat(const MPoly& A, const MPoly& D, Var var);

/// Logarithmic part of h (squarefree proper denominator in `var`).
std::vector<LogTerm> log_part(const RatFunc& h, Var var, ArgNormalization norm = ArgNormalization::Monic);

Primitive integrate_univariate(const RatFunc& f, Var var, ArgNormalization norm = ArgNormalization::Monic);

/// Rational part of d/dx_l of the log term: the sum over roots of
/// c * d(argpoly)/dx_l / argpoly, with c itself differentiated through the
/// implicit function theorem when respoly depends on x_l.
RatFunc log_derivative(const LogTerm& t, Var l);

/// The remaining, logarithmic part of d/dx_l is sum_c (dc/dx_l) log(argpoly).
/// This returns d/d(var) of that sum, which vanishes iff the sum does.
RatFunc log_residue_probe(const LogTerm& t, Var l);

/// True iff the residues of `t` depend on x_l.
bool log_residue_moves(const LogTerm& t, Var l);

/// Rational part of d/dx_l of a primitive (log residue terms excluded).
RatFunc primitive_derivative(const Primitive& p, Var l);

void sort_logs(std::vector<LogTerm>& logs);

}  // namespace formint
