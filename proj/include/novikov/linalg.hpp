#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "novikov/matrix.hpp"
#include "novikov/scalar.hpp"

namespace novikov {

struct SparseEntry {
  std::size_t index;
  Scalar value;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sparse vector: entries sorted by index, no stored zeros.
using SparseVec = std::vector<SparseEntry>;

SparseVec to_sparse(const Vector& v);
Vector to_dense(const SparseVec& v, std::size_t n);
Scalar sparse_get(const SparseVec& v, std::size_t index);
/// a - f*b
SparseVec sparse_sub(const SparseVec& a, const Scalar& f, const SparseVec& b);
/// Accumulates (index, value) pairs into canonical sparse form.
SparseVec sparse_from_pairs(std::vector<SparseEntry> entries);

/// Reduced row echelon form of a sparse row set.
struct Echelon {
  std::vector<SparseVec> rows;        // pivot entry 1, zero in every other pivot column
  std::vector<std::size_t> pivots;    // ascending; pivots[r] is the leading column of rows[r]
};

Echelon row_reduce(std::vector<SparseVec> rows, std::size_t cols);

/// Subspace of k^n stored through its reduced echelon basis, so equality of
/// subspaces is equality of bases.
class Subspace {
public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t n);
  static Subspace zero(std::size_t n) { return Subspace(n); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the echelon basis; throws InputError if v is outside.
  Vector coordinates(const Vector& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  bool invariant_under(const Matrix& a) const;
  /// Matrix of a restricted to this (invariant) subspace, in the echelon basis.
  Matrix restrict(const Matrix& a) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Lexicographically earliest standard basis indices completing s to k^n.
std::vector<std::size_t> standard_complement(const Subspace& s);

struct LinearSolution {
  bool consistent = false;
  Vector particular;                 // free variables set to zero
  std::vector<std::size_t> pivots;   // pivot columns of A
  std::vector<std::size_t> free;     // non-pivot columns of A, ascending
  /// One direction per free column: 1 there, 0 at the other free columns.
  std::vector<SparseVec> directions;
  Subspace nullspace;
  Vector witness;                    // inconsistent: y^T A = 0 and y^T b = 1
  std::size_t rank = 0;
};

/// Solves A x = b given as sparse rows over `cols` unknowns.
LinearSolution solve_sparse(const std::vector<SparseVec>& rows, const Vector& rhs, std::size_t cols);
LinearSolution solve_linear(const Matrix& a, const Vector& b);

Subspace nullspace(const Matrix& a);
std::size_t rank(const Matrix& a);
std::size_t sparse_rank(const std::vector<SparseVec>& rows, std::size_t cols);
Matrix inverse(const Matrix& a);  // throws NotInvertible

/// P with P N P^-1 = J(n), built from the Krylov chain of the first standard
/// basis vector v with N^(n-1) v != 0.
Matrix nilpotent_regular_basis(const Matrix& n);

/// Span of w v over v in V and w a product of exactly `length` operators.
Subspace word_image_space(const std::vector<Matrix>& ops, const Subspace& v, std::size_t length);
/// Common kernel of all products of exactly `length` operators.
Subspace word_kernel_space(const std::vector<Matrix>& ops, std::size_t dim, std::size_t length);

}  // namespace novikov
