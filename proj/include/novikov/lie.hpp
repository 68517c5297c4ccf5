#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "novikov/error.hpp"
#include "novikov/linalg.hpp"
#include "novikov/tensor.hpp"

namespace novikov {

/// A Lie algebra given by structure constants in a fixed basis. Instances
/// only come out of validate_lie, so the bracket is always antisymmetric and
/// satisfies the Jacobi identity.
class LieAlgebra {
public:
  LieAlgebra() = default;

  std::size_t dim() const { return bracket_.dim(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const StructureTensor& structure() const { return bracket_; }

  Vector bracket(const Vector& x, const Vector& y) const { return bracket_.apply(x, y); }
  Vector bracket(std::size_t i, std::size_t j) const { return bracket_.apply(i, j); }
  Matrix ad(std::size_t i) const { return bracket_.left(i); }
  Matrix ad(const Vector& x) const { return bracket_.left(x); }

  bool is_abelian() const { return bracket_.is_zero(); }

private:
  friend LieAlgebra validate_lie(StructureTensor, std::vector<std::string>);
  LieAlgebra(StructureTensor t, std::vector<std::string> labels) : bracket_(std::move(t)), labels_(std::move(labels)) {}

  StructureTensor bracket_;
  std::vector<std::string> labels_;
};

struct LieViolation {
  ValidationError::Kind kind;
  std::array<std::size_t, 3> triple;  // 0-based
};

/// First antisymmetry or Jacobi failure in lexicographic basis order.
std::optional<LieViolation> find_lie_violation(const StructureTensor& t);

/// Throws ValidationError naming the first failing triple. Missing labels
/// default to e1..en.
LieAlgebra validate_lie(StructureTensor t, std::vector<std::string> labels = {});

std::vector<std::string> default_labels(std::size_t n, const std::string& stem = "e");

/// span [U, W].
Subspace bracket_space(const LieAlgebra& g, const Subspace& u, const Subspace& w);

/// g^(1) = g, g^(i+1) = [g^(i), g^(i)], listed until the first repetition.
std::vector<Subspace> derived_series(const LieAlgebra& g);
/// g^1 = g, g^(i+1) = [g, g^i], listed until the first repetition.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

/// c with g^(c+1) = 0, if nilpotent.
std::optional<std::size_t> nilpotency_class(const LieAlgebra& g);
/// p with g^((p+1)) = 0, if solvable.
std::optional<std::size_t> derived_length(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
/// Term g^k of the lower central series (k >= 1), extended past stabilization.
Subspace lower_central_term(const LieAlgebra& g, std::size_t k);
Subspace center(const LieAlgebra& g);
/// tr ad(x) = 0 for all x.
bool is_unimodular(const LieAlgebra& g);

struct IdealWitness {
  std::size_t basis_index;  // e_i with [e_i, v] outside I
  Vector element;           // v in I
};
std::optional<IdealWitness> find_ideal_violation(const LieAlgebra& g, const Subspace& ideal);

/// Quotient g / I on the lexicographically earliest standard complement.
struct Quotient {
  LieAlgebra algebra;
  std::vector<std::size_t> complement;  // original basis indices kept
  Matrix projection;                    // (dim g - dim I) x dim g
};

/// Coordinates along the standard complement with respect to I + complement.
Matrix complement_projection(const Subspace& ideal, const std::vector<std::size_t>& complement);

Quotient quotient_map(const LieAlgebra& g, const Subspace& ideal);
LieAlgebra quotient(const LieAlgebra& g, const Subspace& ideal);

/// Invariant profile used in place of isomorphism testing.
struct Profile {
  std::size_t dim = 0;
  std::vector<std::size_t> derived_dims;
  std::vector<std::size_t> lower_central_dims;
  std::optional<std::size_t> nilpotency_class;
  std::optional<std::size_t> derived_length;
  bool unimodular = false;
  std::size_t center_dim = 0;
  friend bool operator==(const Profile&, const Profile&) = default;
};
Profile profile(const LieAlgebra& g);

}  // namespace novikov
