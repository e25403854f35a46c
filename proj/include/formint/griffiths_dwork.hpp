#pragma once

#include <string>
#include <vector>

#include "formint/forms.hpp"
#include "formint/groebner.hpp"

namespace formint {

/// Ring of homogeneous coordinates xi0, ..., xim.
RingPtr make_projective_ring(int m);

/// P * Omega / Q^ell in homogeneous coordinates of P^m.
struct ProjForm {
  MPoly P;
  MPoly Q;
  unsigned ell = 1;
  int m = 0;
};

struct HomogenizeResult {
  bool zero = false;
  ProjForm form;
  /// Empty iff the smooth theory applies to the polar locus.
  std::vector<std::string> violations;
};

/// Pulls back f dx_1 ^ ... ^ dx_m (f over the first m ring variables) along
/// x_i = xi_i / xi_0.
HomogenizeResult homogenize_m_form(const RatFunc& f, int m);

struct GDStage {
  unsigned order = 0;     // pole order of the form being reduced
  std::vector<MPoly> A;   // P = sum A_i dQ/dxi_i + r
};

struct GDResult {
  std::vector<GDStage> phis;    // stages with order > 1 define the phi forms
  std::vector<MPoly> remainders;  // r_1, r_2, ...
  bool exact = false;
  bool reconstruction_checked = false;
};

/// Pole-order reduction; exact iff every remainder vanishes. Without early
/// exit the identity w = sum d(phi_k) + sum r_k Omega/Q^(ell-k+1) is checked.
/// Throws NotHomogeneous, DegreeMismatch, NotSmooth.
GDResult gd_reduce(const ProjForm& w, bool early_exit = false);

/// Omega = sum (-1)^i xi_i dxi_0 ^ .. (omit i) .. ^ dxi_m.
DiffForm omega_form(const RingPtr& ring, int m);
/// The (m-1)-form phi of a stage with order o > 1, d(phi) = (sum A_i dQ_i) Omega/Q^o - P_next Omega/Q^(o-1).
DiffForm phi_form(const GDStage& stage, const MPoly& Q, const RingPtr& ring, int m);
/// sum d(phi_k) + sum r_k Omega/Q^(order_k).
DiffForm gd_reconstruct(const GDResult& r, const MPoly& Q, const RingPtr& ring, int m);

/// sum_i d u_i / dx_i == f over the first u.size() ring variables.
bool verify_picard_solution(const RatFunc& f, const std::vector<RatFunc>& u);

}  // namespace formint
