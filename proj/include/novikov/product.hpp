#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "novikov/lie.hpp"
#include "novikov/tensor.hpp"

namespace novikov {

/// Bilinear product x.y on k^n with no symmetry constraint. L(x)y = x.y and
/// R(x)y = y.x throughout.
class AlgebraProduct {
public:
  AlgebraProduct() = default;
  explicit AlgebraProduct(std::size_t dim) : tensor_(dim) {}
  explicit AlgebraProduct(StructureTensor t) : tensor_(std::move(t)) {}

  std::size_t dim() const { return tensor_.dim(); }
  const StructureTensor& tensor() const { return tensor_; }
  StructureTensor& tensor() { return tensor_; }

  Vector operator()(const Vector& x, const Vector& y) const { return tensor_.apply(x, y); }
  Vector operator()(std::size_t i, std::size_t j) const { return tensor_.apply(i, j); }
  Matrix left(std::size_t i) const { return tensor_.left(i); }
  Matrix left(const Vector& x) const { return tensor_.left(x); }
  Matrix right(std::size_t i) const { return tensor_.right(i); }
  Matrix right(const Vector& x) const { return tensor_.right(x); }

  friend bool operator==(const AlgebraProduct&, const AlgebraProduct&) = default;

private:
  StructureTensor tensor_;
};

/// Outcome of an identity check. `witness` holds the first failing basis
/// tuple (0-based) in lexicographic order.
struct CheckResult {
  bool holds = true;
  std::string condition;
  std::vector<std::size_t> witness;

  explicit operator bool() const { return holds; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string condition, std::vector<std::size_t> witness) {
    return {false, std::move(condition), std::move(witness)};
  }
};

/// x(yz) - (xy)z = y(xz) - (yx)z.
CheckResult is_left_symmetric(const AlgebraProduct& p);
/// Left symmetry plus (xy)z = (xz)y.
CheckResult is_novikov(const AlgebraProduct& p);
/// xy - yx = [x,y].
CheckResult is_compatible(const AlgebraProduct& p, const LieAlgebra& g);

/// [R(e_i), R(e_j)] = 0.
CheckResult right_multiplications_commute(const AlgebraProduct& p);
/// L(xy - yx) = [L(x), L(y)].
CheckResult left_is_representation(const AlgebraProduct& p);
/// L([x,y]) + ad([x,y]) - [ad x, L y] - [L x, ad y] = 0 with L from p and
/// the bracket of g.
CheckResult linear_relation_holds(const AlgebraProduct& p, const LieAlgebra& g);
/// [x,y]z + [y,z]x + [z,x]y = 0 and x[y,z] + y[z,x] + z[x,y] = 0 for the
/// commutator of p.
CheckResult derived_identities_hold(const AlgebraProduct& p);

/// Algebra with bracket xy - yx; throws NotLeftSymmetric.
LieAlgebra commutator_lie(const AlgebraProduct& p, std::vector<std::string> labels = {});

struct Completeness {
  enum class Verdict { Complete, Incomplete, HeuristicUnknown };
  Verdict verdict = Verdict::Complete;
  std::optional<Vector> witness;  // x with R(x) not nilpotent
  bool exact = true;              // false when only sampled
};

/// Number of sampled linear combinations used for non-Novikov products.
inline constexpr std::size_t kCompletenessSamples = 32;

/// All R(x) nilpotent. Exact for Novikov products; for other products the
/// basis and kCompletenessSamples deterministic rational combinations are tested.
Completeness is_complete(const AlgebraProduct& p);

/// The deterministic sample points used by is_complete.
std::vector<Vector> completeness_samples(std::size_t dim);

/// x.y = [x,y]/2.
AlgebraProduct half_bracket(const LieAlgebra& g);

/// Structure constants in the basis given by the columns of `basis`.
AlgebraProduct change_basis(const AlgebraProduct& p, const Matrix& basis);

std::string to_string(Completeness::Verdict v);

}  // namespace novikov
