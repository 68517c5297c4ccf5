#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "novikov/linalg.hpp"
#include "novikov/matrix.hpp"
#include "novikov/scalar.hpp"

namespace novikov {

/// Sparse n x n x n array c(i,j,k): the k-th coordinate of mu(e_i, e_j) for a
/// bilinear map mu. Indices are 0-based; stored entries are nonzero.
class StructureTensor {
public:
  explicit StructureTensor(std::size_t dim = 0) : dim_(dim), cells_(dim * dim) {}

  std::size_t dim() const { return dim_; }

  Scalar get(std::size_t i, std::size_t j, std::size_t k) const;
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);

  /// mu(e_i, e_j) as a sparse vector.
  const SparseVec& cell(std::size_t i, std::size_t j) const { return cells_[i * dim_ + j]; }
  void set_cell(std::size_t i, std::size_t j, SparseVec v);

  /// mu(x, y).
  Vector apply(const Vector& x, const Vector& y) const;
  /// mu(e_i, e_j) as a dense vector.
  Vector apply(std::size_t i, std::size_t j) const;
  /// Matrix of y -> mu(e_i, y).
  Matrix left(std::size_t i) const;
  /// Matrix of y -> mu(x, y).
  Matrix left(const Vector& x) const;
  /// Matrix of y -> mu(y, e_i).
  Matrix right(std::size_t i) const;
  Matrix right(const Vector& x) const;

  bool is_zero() const;
  std::size_t nonzeros() const;

  /// Structure constants of the same bilinear map in the basis given by the
  /// columns of `basis`.
  StructureTensor change_basis(const Matrix& basis) const;

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.dim_ == b.dim_ && a.cells_ == b.cells_;
  }
  friend StructureTensor operator-(const StructureTensor& a, const StructureTensor& b);
  friend StructureTensor operator+(const StructureTensor& a, const StructureTensor& b);
  friend StructureTensor operator*(const Scalar& s, const StructureTensor& a);

private:
  void check(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t dim_;
  std::vector<SparseVec> cells_;
};

/// mu(x,y) - mu(y,x).
StructureTensor antisymmetrize(const StructureTensor& t);

/// FNV-1a 64 over the canonical text of the tensor; stable across platforms.
std::uint64_t tensor_hash(const StructureTensor& t);

}  // namespace novikov
