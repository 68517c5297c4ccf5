#include "novikov/tensor.hpp"

#include <string>

#include "novikov/error.hpp"

namespace novikov {

void StructureTensor::check(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_)
    throw InputError("structure tensor index out of range (dim " + std::to_string(dim_) + ")");
}

Scalar StructureTensor::get(std::size_t i, std::size_t j, std::size_t k) const {
  check(i, j, k);
  return sparse_get(cells_[i * dim_ + j], k);
}

void StructureTensor::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  check(i, j, k);
  SparseVec& c = cells_[i * dim_ + j];
  Scalar old = sparse_get(c, k);
  c = sparse_sub(c, Scalar(1), SparseVec{{k, old - value}});
}

void StructureTensor::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  check(i, j, k);
  if (value == 0) return;
  SparseVec& c = cells_[i * dim_ + j];
  c = sparse_sub(c, Scalar(-1), SparseVec{{k, value}});
}

void StructureTensor::set_cell(std::size_t i, std::size_t j, SparseVec v) {
  check(i, j, 0);
  for (const auto& e : v)
    if (e.index >= dim_) throw InputError("structure tensor index out of range");
  cells_[i * dim_ + j] = sparse_from_pairs(std::move(v));
}

Vector StructureTensor::apply(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw InputError("tensor argument dimension mismatch");
  Vector r = zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const Scalar f = x[i] * y[j];
      for (const auto& e : cells_[i * dim_ + j]) r[e.index] += f * e.value;
    }
  }
  return r;
}

Vector StructureTensor::apply(std::size_t i, std::size_t j) const {
  check(i, j, 0);
  return to_dense(cells_[i * dim_ + j], dim_);
}

Matrix StructureTensor::left(std::size_t i) const {
  check(i, 0, 0);
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (const auto& e : cells_[i * dim_ + j]) m(e.index, j) = e.value;
  return m;
}

Matrix StructureTensor::left(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (x.at(i) != 0) m += x[i] * left(i);
  return m;
}

Matrix StructureTensor::right(std::size_t i) const {
  check(i, 0, 0);
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (const auto& e : cells_[j * dim_ + i]) m(e.index, j) = e.value;
  return m;
}

Matrix StructureTensor::right(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (x.at(i) != 0) m += x[i] * right(i);
  return m;
}

bool StructureTensor::is_zero() const {
  for (const auto& c : cells_)
    if (!c.empty()) return false;
  return true;
}

std::size_t StructureTensor::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cells_) n += c.size();
  return n;
}

StructureTensor StructureTensor::change_basis(const Matrix& basis) const {
  if (!basis.square() || basis.rows() != dim_) throw InputError("change of basis has the wrong shape");
  const Matrix inv = inverse(basis);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < dim_; ++i) cols.push_back(basis.column(i));
  StructureTensor out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      Vector v = inv * apply(cols[i], cols[j]);
      out.set_cell(i, j, to_sparse(v));
    }
  return out;
}

StructureTensor operator-(const StructureTensor& a, const StructureTensor& b) {
  if (a.dim_ != b.dim_) throw InputError("tensor dimension mismatch");
  StructureTensor r(a.dim_);
  for (std::size_t c = 0; c < a.cells_.size(); ++c) r.cells_[c] = sparse_sub(a.cells_[c], Scalar(1), b.cells_[c]);
  return r;
}

StructureTensor operator+(const StructureTensor& a, const StructureTensor& b) {
  if (a.dim_ != b.dim_) throw InputError("tensor dimension mismatch");
  StructureTensor r(a.dim_);
  for (std::size_t c = 0; c < a.cells_.size(); ++c) r.cells_[c] = sparse_sub(a.cells_[c], Scalar(-1), b.cells_[c]);
  return r;
}

StructureTensor operator*(const Scalar& s, const StructureTensor& a) {
  StructureTensor r(a.dim_);
  if (s == 0) return r;
  r.cells_ = a.cells_;
  for (auto& c : r.cells_)
    for (auto& e : c) e.value *= s;
  return r;
}

StructureTensor antisymmetrize(const StructureTensor& t) {
  StructureTensor r(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j) r.set_cell(i, j, sparse_sub(t.cell(i, j), Scalar(1), t.cell(j, i)));
  return r;
}

std::uint64_t tensor_hash(const StructureTensor& t) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  feed("dim " + std::to_string(t.dim()) + "\n");
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.dim(); ++j)
      for (const auto& e : t.cell(i, j))
        feed(std::to_string(i + 1) + " " + std::to_string(j + 1) + " " + std::to_string(e.index + 1) + " " +
             to_string(e.value) + "\n");
  return h;
}

}  // namespace novikov
