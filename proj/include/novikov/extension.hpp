#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "novikov/lie.hpp"
#include "novikov/product.hpp"

namespace novikov {

/// Extension 0 -> a -> g -> b -> 0 with a abelian, together with optional
/// products on a and b. Basis of g: a first, then b.
struct ExtensionData {
  ExtensionData() = default;
  ExtensionData(std::size_t dim_a, std::size_t dim_b);

  std::size_t dim_a = 0;            // n
  std::size_t dim_b = 0;            // m
  StructureTensor b_bracket;        // m-dim
  AlgebraProduct b_product;         // m-dim
  AlgebraProduct a_product;         // n-dim, commutative associative
  std::vector<Matrix> phi;          // A_i = phi(e_i), n x n
  std::vector<Vector> omega;        // omega[i*m + j] = Omega(e_i, e_j)

  const Vector& Omega(std::size_t i, std::size_t j) const { return omega[i * dim_b + j]; }
  /// Sets Omega(e_i,e_j) = v and Omega(e_j,e_i) = -v.
  void set_Omega(std::size_t i, std::size_t j, const Vector& v);
  Matrix phi_of(const Vector& x) const;
  Vector Omega_of(const Vector& x, const Vector& y) const;

  bool b_abelian() const { return b_bracket.is_zero(); }
  bool trivial_products() const { return a_product.tensor().is_zero() && b_product.tensor().is_zero(); }
};

/// X_i = phi_1(e_i), Y_i = phi_2(e_i), x[i*m + j] = omega(e_i, e_j).
struct LiftData {
  LiftData() = default;
  LiftData(std::size_t dim_a, std::size_t dim_b);

  std::vector<Matrix> X, Y;
  std::vector<Vector> x;

  std::size_t dim_b() const { return X.size(); }
  const Vector& omega(std::size_t i, std::size_t j) const { return x[i * X.size() + j]; }
  Vector& omega(std::size_t i, std::size_t j) { return x[i * X.size() + j]; }
  friend bool operator==(const LiftData&, const LiftData&) = default;
};

/// First violated extension invariant, or nothing when the data is valid.
std::optional<std::string> extension_violation(const ExtensionData& ext);
/// Throws InvariantViolation naming the broken invariant.
void validate_extension(const ExtensionData& ext);

/// [(a,x),(b,y)] = (phi(x)b - phi(y)a + Omega(x,y), [x,y]).
LieAlgebra assemble(const ExtensionData& ext);

/// Split of a 2-step solvable algebra: a = [g,g], b = g/[g,g] along the
/// lexicographically earliest standard complement of [g,g].
struct TwoStepSplit {
  ExtensionData ext;
  Matrix basis;  // columns: echelon basis of [g,g], then the section images
  std::vector<std::size_t> section;  // basis indices of g spanning the complement
};
/// Throws NotTwoStepSolvable.
TwoStepSplit two_step_solvable_from(const LieAlgebra& g);

/// (a,x)(b,y) = (a.b + phi_1(y)a + phi_2(x)b + omega(x,y), x.y).
AlgebraProduct lift_product(const ExtensionData& ext, const LiftData& lift);

/// Component conditions, exactly equivalent to the lifted product being
/// left-symmetric and compatible with assemble(ext). `condition` names the
/// first failure; `witness` holds the 0-based indices involved.
CheckResult check_lift_lsa(const ExtensionData& ext, const LiftData& lift);
/// check_lift_lsa plus the right-commutativity components. With trivial
/// products the dedicated abelian system is evaluated as well and must agree.
CheckResult check_lift_novikov(const ExtensionData& ext, const LiftData& lift);
/// The system for trivial products on a and b, in matrix form.
CheckResult check_trivial_novikov_system(const ExtensionData& ext, const LiftData& lift, bool lsa_only = false);

/// ext expressed in new bases: columns of c for a, columns of f for b.
ExtensionData change_basis(const ExtensionData& ext, const Matrix& c, const Matrix& f);
/// lift expressed in the same new bases.
LiftData change_basis(const LiftData& lift, const Matrix& c, const Matrix& f);

}  // namespace novikov
