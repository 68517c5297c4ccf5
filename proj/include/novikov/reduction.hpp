#pragma once

#include <cstddef>
#include <vector>

#include "novikov/extension.hpp"
#include "novikov/lie.hpp"

namespace novikov {

/// Representation of a Lie algebra b on k^dim by the matrices action[i].
struct ModuleAction {
  LieAlgebra b;
  std::size_t dim = 0;
  std::vector<Matrix> action;

  Matrix act(const Vector& x) const;
};

/// Throws InvariantViolation unless action([e_i,e_j]) = [action_i, action_j].
void validate_module(const ModuleAction& m);

/// Common kernel of the action matrices.
Subspace h0(const ModuleAction& m);
/// The dual-side module on row vectors, v -> -v phi(X), written on columns.
ModuleAction row_module(const ModuleAction& m);
/// X.B = phi_1(X)B - B phi_2(X) on n1 x n2 matrices flattened row-major.
ModuleAction combination(const ModuleAction& m1, const ModuleAction& m2);

struct Decomposition {
  Subspace v_n;   // every long enough word acts as zero
  Subspace v_0;   // no nonzero invariants
  Matrix basis;   // columns: basis of v_n, then basis of v_0
};
/// V = V_n + V_0 via words of length dim V. Throws NotNilpotentAlgebra and
/// InternalError if a decomposition invariant fails.
Decomposition fitting_decompose(const ModuleAction& m);

/// alpha with B_i = action_i alpha for every basis e_i of b. Throws
/// NotACocycle when B_[x,y] = X.B_y - Y.B_x fails and InconsistentSystem
/// when no alpha exists.
Vector solve_coboundary_1(const ModuleAction& m, const std::vector<Vector>& b);

/// lambda: b -> a_0 with d(lambda) = -Omega'' for a module split a = a_n + a_0.
struct InducedNilpotent {
  ExtensionData ext_n;              // a/a_0, restricted action, Omega'
  ExtensionData normalized;         // ext in the split a-basis
  Matrix basis;                     // a-basis: columns of V_n, then of V_0
  std::size_t dim_n = 0, dim_0 = 0;
  std::vector<Vector> lambda;       // lambda(e_i) in split coordinates
};
/// Throws NotNilpotentAlgebra, PreconditionFailed (a-product present) and
/// InconsistentSystem when the coboundary equation has no solution.
InducedNilpotent induced_nilpotent_extension(const ExtensionData& ext);

/// Extends a lift of ext_n to ext: X = diag(X', 0), Y = diag(Y', A''),
/// omega = (omega', 0), transported through the section shift lambda.
/// Throws LiftCheckFailed when lift_n is not a left-symmetric lift.
LiftData reduction_lift(const ExtensionData& ext, const LiftData& lift_n);

/// Complete left-symmetric product on a 2-step solvable g with g^5 = g^4,
/// in g's basis. Throws HypothesisFailed naming the failing precondition.
AlgebraProduct prop57_construct(const LieAlgebra& g);

}  // namespace novikov
