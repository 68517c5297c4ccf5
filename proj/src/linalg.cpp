#include "novikov/linalg.hpp"

#include <algorithm>

#include "novikov/error.hpp"

namespace novikov {

SparseVec to_sparse(const Vector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back({i, v[i]});
  return s;
}

Vector to_dense(const SparseVec& v, std::size_t n) {
  Vector d(n, Scalar(0));
  for (const auto& e : v) d.at(e.index) = e.value;
  return d;
}

Scalar sparse_get(const SparseVec& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const SparseEntry& e, std::size_t i) { return e.index < i; });
  if (it != v.end() && it->index == index) return it->value;
  return 0;
}

SparseVec sparse_sub(const SparseVec& a, const Scalar& f, const SparseVec& b) {
  SparseVec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      Scalar v = -f * b[j].value;
      if (v != 0) r.push_back({b[j].index, std::move(v)});
      ++j;
    } else {
      Scalar v = a[i].value - f * b[j].value;
      if (v != 0) r.push_back({a[i].index, std::move(v)});
      ++i;
      ++j;
    }
  }
  return r;
}

SparseVec sparse_from_pairs(std::vector<SparseEntry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const SparseEntry& x, const SparseEntry& y) { return x.index < y.index; });
  SparseVec r;
  for (auto& e : entries) {
    if (!r.empty() && r.back().index == e.index) {
      r.back().value += e.value;
      if (r.back().value == 0) r.pop_back();
    } else if (e.value != 0) {
      r.push_back(std::move(e));
    }
  }
  return r;
}

Echelon row_reduce(std::vector<SparseVec> rows, std::size_t cols) {
  // Forward elimination column by column; rows are bucketed by leading column.
  std::vector<std::vector<std::size_t>> bucket(cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    if (rows[r].front().index >= cols || rows[r].back().index >= cols)
      throw InputError("sparse row index out of range");
    bucket[rows[r].front().index].push_back(r);
  }
  Echelon ech;
  for (std::size_t c = 0; c < cols; ++c) {
    auto& cand = bucket[c];
    if (cand.empty()) continue;
    std::size_t best = 0;
    for (std::size_t t = 1; t < cand.size(); ++t)
      if (rows[cand[t]].size() < rows[cand[best]].size()) best = t;
    const std::size_t pr = cand[best];
    SparseVec pivot = std::move(rows[pr]);
    const Scalar lead = pivot.front().value;
    if (lead != 1)
      for (auto& e : pivot) e.value /= lead;
    for (std::size_t t = 0; t < cand.size(); ++t) {
      if (t == best) continue;
      const std::size_t r = cand[t];
      const Scalar f = rows[r].front().value;
      rows[r] = sparse_sub(rows[r], f, pivot);
      if (!rows[r].empty()) bucket[rows[r].front().index].push_back(r);
    }
    std::vector<std::size_t>().swap(cand);
    ech.pivots.push_back(c);
    ech.rows.push_back(std::move(pivot));
  }
  // Back substitution.
  for (std::size_t p = ech.rows.size(); p-- > 0;) {
    const std::size_t col = ech.pivots[p];
    for (std::size_t q = 0; q < p; ++q) {
      const Scalar f = sparse_get(ech.rows[q], col);
      if (f != 0) ech.rows[q] = sparse_sub(ech.rows[q], f, ech.rows[p]);
    }
  }
  return ech;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  std::vector<SparseVec> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw InputError("vector does not live in the ambient space");
    rows.push_back(to_sparse(v));
  }
  Echelon ech = row_reduce(std::move(rows), ambient_dim);
  Subspace s(ambient_dim);
  s.pivots_ = ech.pivots;
  for (const auto& r : ech.rows) s.basis_.push_back(to_dense(r, ambient_dim));
  return s;
}

Subspace Subspace::full(std::size_t n) {
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vector(n, i));
  return span(n, e);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw InputError("vector does not live in the ambient space");
  Vector r = v;
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const Scalar f = r[pivots_[b]];
    if (f != 0) axpy(r, -f, basis_[b]);
  }
  return novikov::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw InputError("vector is not in the subspace");
  Vector c(basis_.size());
  for (std::size_t b = 0; b < basis_.size(); ++b) c[b] = v[pivots_[b]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InputError("ambient dimension mismatch");
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InputError("ambient dimension mismatch");
  // Solve sum a_i u_i - sum b_j w_j = 0.
  const std::size_t p = dim(), q = other.dim();
  Matrix m(ambient_, p + q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, i) = basis_[i][r];
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, p + j) = -other.basis_[j][r];
  Subspace ker = nullspace(m);
  std::vector<Vector> vs;
  for (const auto& k : ker.basis()) {
    Vector v = zero_vector(ambient_);
    for (std::size_t i = 0; i < p; ++i) axpy(v, k[i], basis_[i]);
    vs.push_back(std::move(v));
  }
  return span(ambient_, vs);
}

bool Subspace::invariant_under(const Matrix& a) const {
  if (!a.square() || a.rows() != ambient_) throw InputError("operator does not act on the ambient space");
  for (const auto& v : basis_)
    if (!contains(a * v)) return false;
  return true;
}

Matrix Subspace::restrict(const Matrix& a) const {
  if (!a.square() || a.rows() != ambient_) throw InputError("operator does not act on the ambient space");
  Matrix r(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vector img = a * basis_[j];
    if (!contains(img)) throw InputError("subspace is not invariant under the operator");
    for (std::size_t i = 0; i < dim(); ++i) r(i, j) = img[pivots_[i]];
  }
  return r;
}

std::vector<std::size_t> standard_complement(const Subspace& s) {
  std::vector<std::size_t> chosen;
  Subspace acc = s;
  for (std::size_t i = 0; i < s.ambient_dim() && acc.dim() < s.ambient_dim(); ++i) {
    Vector e = unit_vector(s.ambient_dim(), i);
    if (acc.contains(e)) continue;
    chosen.push_back(i);
    acc = acc.sum(Subspace::span(s.ambient_dim(), {e}));
  }
  return chosen;
}

LinearSolution solve_sparse(const std::vector<SparseVec>& rows, const Vector& rhs, std::size_t cols) {
  if (rows.size() != rhs.size()) throw InputError("linear system: row count does not match right-hand side");
  std::vector<SparseVec> aug;
  aug.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    SparseVec row = rows[r];
    for (const auto& e : row)
      if (e.index >= cols) throw InputError("linear system: column index out of range");
    if (rhs[r] != 0) row.push_back({cols, rhs[r]});
    aug.push_back(std::move(row));
  }
  Echelon ech = row_reduce(std::move(aug), cols + 1);

  LinearSolution sol;
  sol.nullspace = Subspace(cols);
  if (!ech.pivots.empty() && ech.pivots.back() == cols) {
    sol.consistent = false;
    // y with A^T y = 0, b^T y = 1: the transposed system is consistent here.
    std::vector<SparseVec> trows(cols + 1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (const auto& e : rows[r]) trows[e.index].push_back({r, e.value});
      if (rhs[r] != 0) trows[cols].push_back({r, rhs[r]});
    }
    Vector trhs(cols + 1, Scalar(0));
    trhs[cols] = 1;
    LinearSolution dual = solve_sparse(trows, trhs, rows.size());
    if (!dual.consistent) throw InternalError("inconsistency witness system is inconsistent");
    sol.witness = dual.particular;
    return sol;
  }
  sol.consistent = true;
  sol.pivots = ech.pivots;
  sol.rank = ech.pivots.size();
  sol.particular = zero_vector(cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p = 0; p < ech.rows.size(); ++p) {
    is_pivot[ech.pivots[p]] = true;
    sol.particular[ech.pivots[p]] = sparse_get(ech.rows[p], cols);
  }
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) sol.free.push_back(c);

  // Column view of the non-pivot part of the echelon rows.
  std::vector<std::size_t> free_pos(cols, cols);
  for (std::size_t f = 0; f < sol.free.size(); ++f) free_pos[sol.free[f]] = f;
  std::vector<std::vector<SparseEntry>> dir(sol.free.size());
  for (std::size_t f = 0; f < sol.free.size(); ++f) dir[f].push_back({sol.free[f], Scalar(1)});
  for (std::size_t p = 0; p < ech.rows.size(); ++p)
    for (const auto& e : ech.rows[p])
      if (e.index < cols && free_pos[e.index] != cols)
        dir[free_pos[e.index]].push_back({ech.pivots[p], -e.value});
  std::vector<Vector> dense_dirs;
  for (auto& d : dir) {
    sol.directions.push_back(sparse_from_pairs(std::move(d)));
    dense_dirs.push_back(to_dense(sol.directions.back(), cols));
  }
  sol.nullspace = Subspace::span(cols, dense_dirs);
  return sol;
}

LinearSolution solve_linear(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw InputError("solve_linear: A has " + std::to_string(a.rows()) +
                                             " rows but b has " + std::to_string(b.size()) + " entries");
  std::vector<SparseVec> rows;
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(to_sparse(a.row(r)));
  return solve_sparse(rows, b, a.cols());
}

Subspace nullspace(const Matrix& a) { return solve_linear(a, zero_vector(a.rows())).nullspace; }

std::size_t sparse_rank(const std::vector<SparseVec>& rows, std::size_t cols) {
  return row_reduce(rows, cols).pivots.size();
}

std::size_t rank(const Matrix& a) {
  std::vector<SparseVec> rows;
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(to_sparse(a.row(r)));
  return sparse_rank(rows, a.cols());
}

Matrix inverse(const Matrix& a) {
  if (!a.square()) throw NotInvertible("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<SparseVec> rows;
  for (std::size_t r = 0; r < n; ++r) {
    SparseVec row = to_sparse(a.row(r));
    row.push_back({n + r, Scalar(1)});
    rows.push_back(std::move(row));
  }
  Echelon ech = row_reduce(std::move(rows), 2 * n);
  if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) throw NotInvertible("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& e : ech.rows[r])
      if (e.index >= n) inv(r, e.index - n) = e.value;
  return inv;
}

Matrix nilpotent_regular_basis(const Matrix& n) {
  if (!n.square()) throw NotRegularNilpotent("operator is not square");
  const std::size_t d = n.rows();
  if (d == 0) return Matrix(0, 0);
  if (!power(n, d).is_zero()) throw NotRegularNilpotent("operator is not nilpotent");
  const Matrix top = power(n, d - 1);
  if (top.is_zero()) throw NotRegularNilpotent("nilpotency index is below the dimension");
  std::size_t start = d;
  for (std::size_t i = 0; i < d; ++i)
    if (!is_zero(top.column(i))) {
      start = i;
      break;
    }
  // Columns N^(d-1) v, ..., N v, v: N maps each column to its left neighbour.
  std::vector<Vector> chain(d);
  chain[d - 1] = unit_vector(d, start);
  for (std::size_t k = d - 1; k-- > 0;) chain[k] = n * chain[k + 1];
  return inverse(Matrix::from_columns(chain, d));
}

Subspace word_image_space(const std::vector<Matrix>& ops, const Subspace& v, std::size_t length) {
  for (const auto& op : ops)
    if (!op.square() || op.rows() != v.ambient_dim()) throw InputError("operator does not act on the ambient space");
  Subspace current = v;
  for (std::size_t step = 0; step < length && !current.is_zero(); ++step) {
    std::vector<Vector> images;
    for (const auto& op : ops)
      for (const auto& b : current.basis()) images.push_back(op * b);
    current = Subspace::span(v.ambient_dim(), images);
  }
  if (ops.empty() && length > 0) return Subspace(v.ambient_dim());
  return current;
}

Subspace word_kernel_space(const std::vector<Matrix>& ops, std::size_t dim, std::size_t length) {
  // ker of all words = annihilator of the row space spanned by the transposed words.
  std::vector<Matrix> transposed;
  for (const auto& op : ops) transposed.push_back(op.transpose());
  Subspace rowspace = word_image_space(transposed, Subspace::full(dim), length);
  Matrix m = Matrix::from_rows(rowspace.basis(), dim);
  if (rowspace.is_zero()) return Subspace::full(dim);
  return nullspace(m);
}

}  // namespace novikov
