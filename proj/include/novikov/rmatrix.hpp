#pragma once

#include <cstddef>
#include <optional>

#include "novikov/lie.hpp"
#include "novikov/product.hpp"

namespace novikov {

/// Linear operator T on the space of g.
struct RMatrix {
  RMatrix(LieAlgebra g, Matrix t);
  LieAlgebra g;
  Matrix t;
};

/// [x,y]_T = [Tx,y] + [x,Ty]. Jacobi is not assumed.
StructureTensor deformed_bracket(const RMatrix& r);
/// The deformed bracket as a Lie algebra; throws ValidationError.
LieAlgebra deformed_lie(const RMatrix& r);

/// [Tx,Ty] = T([Tx,y] + [x,Ty]) on basis pairs.
CheckResult check_cybe(const RMatrix& r);
/// [x,T([y,Tz])] = [y,T([x,Tz])] on basis triples.
CheckResult check_novbed(const RMatrix& r);

/// x.y = [Tx,y], a Novikov product compatible with the deformed bracket.
/// Throws PreconditionFailed unless both checks pass.
AlgebraProduct induced_product(const RMatrix& r);

/// T(e_l) = e_m, T(e_i) = 0 otherwise (0-based). Throws HypothesisFailed
/// when some [e_i, e_m] has a nonzero e_l coefficient.
RMatrix basis_rmatrix(const LieAlgebra& g, std::size_t l, std::size_t m);

/// [[a,1,2b],[a^2,a,2ab],[ab,b,2b^2]] on sl2.
Matrix sl2_family(const Scalar& alpha, const Scalar& beta);

struct ClassBounds {
  std::optional<std::size_t> nil_class_g, nil_class_gT;
  std::optional<std::size_t> solv_class_g, solv_class_gT;
  bool nilpotent_bound_holds = true;  // vacuous when g is not nilpotent
  bool solvable_bound_holds = true;   // vacuous when g is not solvable
};

/// Classes of g and of the deformed algebra. Throws InvariantViolation if a
/// bound fails where g is nilpotent or solvable.
ClassBounds class_bounds_report(const RMatrix& r);

}  // namespace novikov
