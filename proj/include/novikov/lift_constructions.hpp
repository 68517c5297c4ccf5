#pragma once

#include <cstddef>

#include "novikov/extension.hpp"

namespace novikov {

/// x_ij = v_ij/2, X_i = -A_i/3, Y_i = 2A_i/3. A left-symmetric lift when
/// all A_iA_j vanish (3-step nilpotent case). Throws HypothesisFailed.
LiftData scheuneman_lift(const ExtensionData& ext);

/// dim b = 2: X_1 = -A_1/2, X_2 = 0, x_21 = -v_12, other x_ij = 0. A Novikov
/// lift when all A_iA_j vanish. Throws PreconditionFailed or HypothesisFailed.
LiftData two_gen_lift(const ExtensionData& ext);

/// phi_1 = 0, phi_2 = phi, omega(x,y) = phi(e)^-1 phi(x) Omega(e,y).
/// Throws NotInvertible when phi(e) is singular.
LiftData iso_lift(const ExtensionData& ext, const Vector& e);

/// Novikov lift when phi(e_x) is nilpotent of index dim a. Works in the
/// basis where phi(e_x) = J(n) and reports the lift in the caller's bases.
/// Throws NotRegularNilpotent, GammaExpansionFailed, and InternalError if a
/// normalization identity fails.
LiftData jordan_lift(const ExtensionData& ext, std::size_t x);

/// Coefficients g_k with A = sum g_k J(n)^k for A commuting with J(n).
/// Throws GammaExpansionFailed.
Vector gamma_expansion(const Matrix& a);

struct SemidirectLift {
  ExtensionData ext;  // input with the b-product installed
  LiftData lift;
  bool novikov_hypothesis = false;  // phi(x.y) = 0 on basis pairs
};
/// phi_1 = 0, omega = 0, phi_2 = phi, trivial a-product, for Omega = 0 and a
/// left-symmetric b-product compatible with the bracket of b.
SemidirectLift semidirect_lift(const ExtensionData& ext, const AlgebraProduct& b_product);

/// Product induced on the lexicographically earliest standard complement of
/// a two-sided ideal. Throws NotProductIdeal.
AlgebraProduct novikov_ideal_quotient(const AlgebraProduct& p, const Subspace& ideal);

}  // namespace novikov
