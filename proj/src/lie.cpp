#include "novikov/lie.hpp"

#include "novikov/error.hpp"

namespace novikov {

std::vector<std::string> default_labels(std::size_t n, const std::string& stem) {
  std::vector<std::string> l;
  for (std::size_t i = 0; i < n; ++i) l.push_back(stem + std::to_string(i + 1));
  return l;
}

std::optional<LieViolation> find_lie_violation(const StructureTensor& t) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const SparseVec sum = sparse_sub(t.cell(i, j), Scalar(-1), t.cell(j, i));
      if (!sum.empty()) return LieViolation{ValidationError::Kind::Antisymmetry, {i, j, sum.front().index}};
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Vector s = t.apply(ei, t.apply(j, k));
        s = s + t.apply(ej, t.apply(k, i));
        s = s + t.apply(ek, t.apply(i, j));
        if (!is_zero(s)) return LieViolation{ValidationError::Kind::Jacobi, {i, j, k}};
      }
  return std::nullopt;
}

LieAlgebra validate_lie(StructureTensor t, std::vector<std::string> labels) {
  if (labels.empty()) labels = default_labels(t.dim());
  if (labels.size() != t.dim()) throw InputError("label count does not match the dimension");
  if (auto v = find_lie_violation(t)) {
    const auto& [i, j, k] = v->triple;
    const std::string where = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
    if (v->kind == ValidationError::Kind::Antisymmetry)
      throw ValidationError(v->kind, i, j, k, "antisymmetry fails at " + where);
    throw ValidationError(v->kind, i, j, k, "Jacobi identity fails at " + where);
  }
  return LieAlgebra(std::move(t), std::move(labels));
}

Subspace bracket_space(const LieAlgebra& g, const Subspace& u, const Subspace& w) {
  std::vector<Vector> vs;
  for (const auto& a : u.basis())
    for (const auto& b : w.basis()) vs.push_back(g.bracket(a, b));
  return Subspace::span(g.dim(), vs);
}

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  std::vector<Subspace> s{Subspace::full(g.dim())};
  while (true) {
    Subspace next = bracket_space(g, s.back(), s.back());
    if (next == s.back()) break;
    s.push_back(std::move(next));
  }
  return s;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const Subspace whole = Subspace::full(g.dim());
  std::vector<Subspace> s{whole};
  while (true) {
    Subspace next = bracket_space(g, whole, s.back());
    if (next == s.back()) break;
    s.push_back(std::move(next));
  }
  return s;
}

std::optional<std::size_t> nilpotency_class(const LieAlgebra& g) {
  auto s = lower_central_series(g);
  if (!s.back().is_zero()) return std::nullopt;
  return s.size() - 1;
}

std::optional<std::size_t> derived_length(const LieAlgebra& g) {
  auto s = derived_series(g);
  if (!s.back().is_zero()) return std::nullopt;
  return s.size() - 1;
}

bool is_nilpotent(const LieAlgebra& g) { return nilpotency_class(g).has_value(); }
bool is_solvable(const LieAlgebra& g) { return derived_length(g).has_value(); }

Subspace lower_central_term(const LieAlgebra& g, std::size_t k) {
  if (k == 0) throw InputError("lower central series is indexed from 1");
  auto s = lower_central_series(g);
  return k <= s.size() ? s[k - 1] : s.back();
}

Subspace center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // x central iff ad(e_i) x = 0 for all i: stack the ad matrices.
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix a = g.ad(i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = a(r, c);
  }
  return nullspace(stacked);
}

bool is_unimodular(const LieAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.ad(i).trace() != 0) return false;
  return true;
}

std::optional<IdealWitness> find_ideal_violation(const LieAlgebra& g, const Subspace& ideal) {
  if (ideal.ambient_dim() != g.dim()) throw InputError("ideal does not live in the algebra");
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (const auto& v : ideal.basis())
      if (!ideal.contains(g.bracket(unit_vector(g.dim(), i), v))) return IdealWitness{i, v};
  return std::nullopt;
}

Matrix complement_projection(const Subspace& ideal, const std::vector<std::size_t>& complement) {
  const std::size_t n = ideal.ambient_dim();
  std::vector<Vector> cols = ideal.basis();
  for (std::size_t c : complement) cols.push_back(unit_vector(n, c));
  const Matrix inv = inverse(Matrix::from_columns(cols, n));
  Matrix proj(complement.size(), n);
  for (std::size_t r = 0; r < complement.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) proj(r, c) = inv(ideal.dim() + r, c);
  return proj;
}

Quotient quotient_map(const LieAlgebra& g, const Subspace& ideal) {
  if (auto w = find_ideal_violation(g, ideal))
    throw NotAnIdeal("[" + g.labels()[w->basis_index] + ", v] leaves the subspace for a basis vector v of it");
  const auto comp = standard_complement(ideal);
  const Matrix proj = complement_projection(ideal, comp);
  const std::size_t q = comp.size();
  StructureTensor t(q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) t.set_cell(a, b, to_sparse(proj * g.bracket(comp[a], comp[b])));
  std::vector<std::string> labels;
  for (std::size_t c : comp) labels.push_back(g.labels()[c]);
  return Quotient{validate_lie(std::move(t), std::move(labels)), comp, proj};
}

LieAlgebra quotient(const LieAlgebra& g, const Subspace& ideal) { return quotient_map(g, ideal).algebra; }

Profile profile(const LieAlgebra& g) {
  Profile p;
  p.dim = g.dim();
  for (const auto& s : derived_series(g)) p.derived_dims.push_back(s.dim());
  for (const auto& s : lower_central_series(g)) p.lower_central_dims.push_back(s.dim());
  p.nilpotency_class = nilpotency_class(g);
  p.derived_length = derived_length(g);
  p.unimodular = is_unimodular(g);
  p.center_dim = center(g).dim();
  return p;
}

}  // namespace novikov
