#include "novikov/reduction.hpp"

#include "novikov/error.hpp"
#include "novikov/lift_constructions.hpp"

namespace novikov {

Matrix ModuleAction::act(const Vector& x) const {
  Matrix out(dim, dim);
  for (std::size_t k = 0; k < action.size(); ++k)
    if (x[k] != 0) out += x[k] * action[k];
  return out;
}

void validate_module(const ModuleAction& m) {
  if (m.action.size() != m.b.dim()) throw InputError("one action matrix per basis element is required");
  for (const auto& a : m.action)
    if (a.rows() != m.dim || a.cols() != m.dim) throw InputError("action matrix has the wrong size");
  for (std::size_t i = 0; i < m.b.dim(); ++i)
    for (std::size_t j = i + 1; j < m.b.dim(); ++j)
      if (m.act(m.b.bracket(i, j)) != commutator(m.action[i], m.action[j]))
        throw InvariantViolation("module action is not a representation at (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ")");
}

Subspace h0(const ModuleAction& m) {
  Matrix stacked(m.action.size() * m.dim, m.dim);
  for (std::size_t i = 0; i < m.action.size(); ++i)
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t c = 0; c < m.dim; ++c) stacked(i * m.dim + r, c) = m.action[i](r, c);
  return nullspace(stacked);
}

ModuleAction row_module(const ModuleAction& m) {
  ModuleAction out{m.b, m.dim, {}};
  for (const auto& a : m.action) out.action.push_back(-a.transpose());
  return out;
}

ModuleAction combination(const ModuleAction& m1, const ModuleAction& m2) {
  if (m1.b.structure() != m2.b.structure()) throw InputError("combination needs the same acting algebra");
  const std::size_t n1 = m1.dim, n2 = m2.dim;
  ModuleAction out{m1.b, n1 * n2, {}};
  for (std::size_t i = 0; i < m1.action.size(); ++i) {
    Matrix a(n1 * n2, n1 * n2);
    const Matrix& p1 = m1.action[i];
    const Matrix& p2 = m2.action[i];
    for (std::size_t r = 0; r < n1; ++r)
      for (std::size_t c = 0; c < n2; ++c)
        for (std::size_t k = 0; k < (n1 > n2 ? n1 : n2); ++k) {
          if (k < n1) a(r * n2 + c, k * n2 + c) += p1(r, k);
          if (k < n2) a(r * n2 + c, r * n2 + k) -= p2(k, c);
        }
    out.action.push_back(std::move(a));
  }
  return out;
}

Decomposition fitting_decompose(const ModuleAction& m) {
  validate_module(m);
  if (!is_nilpotent(m.b)) throw NotNilpotentAlgebra("the acting algebra is not nilpotent");
  const std::size_t d = m.dim;
  Decomposition out;
  out.v_n = word_kernel_space(m.action, d, d);
  out.v_0 = word_image_space(m.action, Subspace::full(d), d);
  if (d == 0 || m.action.empty()) {
    out.v_n = Subspace::full(d);
    out.v_0 = Subspace::zero(d);
  }
  if (!out.v_n.intersect(out.v_0).is_zero() || !out.v_n.sum(out.v_0).is_full())
    throw InternalError("V_n and V_0 do not form a direct sum");
  for (const auto& a : m.action)
    if (!out.v_n.invariant_under(a) || !out.v_0.invariant_under(a)) throw InternalError("decomposition is not invariant");
  std::vector<Vector> cols = out.v_n.basis();
  for (const auto& v : out.v_0.basis()) cols.push_back(v);
  out.basis = Matrix::from_columns(cols, d);
  return out;
}

Vector solve_coboundary_1(const ModuleAction& m, const std::vector<Vector>& b) {
  validate_module(m);
  const std::size_t k = m.b.dim(), d = m.dim;
  if (b.size() != k) throw InputError("one cochain value per basis element is required");
  for (const auto& v : b)
    if (v.size() != d) throw InputError("cochain value has the wrong size");
  auto b_of = [&](const Vector& x) {
    Vector out = zero_vector(d);
    for (std::size_t i = 0; i < k; ++i)
      if (x[i] != 0) axpy(out, x[i], b[i]);
    return out;
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (b_of(m.b.bracket(i, j)) != m.action[i] * b[j] - m.action[j] * b[i])
        throw NotACocycle("cocycle identity fails at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  Matrix stacked(k * d, d);
  Vector rhs(k * d);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) stacked(i * d + r, c) = m.action[i](r, c);
      rhs[i * d + r] = b[i][r];
    }
  const LinearSolution s = solve_linear(stacked, rhs);
  if (!s.consistent) throw InconsistentSystem("B is not a coboundary");
  return s.particular;
}

InducedNilpotent induced_nilpotent_extension(const ExtensionData& ext) {
  validate_extension(ext);
  if (!ext.a_product.tensor().is_zero()) throw PreconditionFailed("the reduction needs a trivial a-product");
  const std::size_t n = ext.dim_a, m = ext.dim_b;
  const LieAlgebra b = validate_lie(ext.b_bracket);
  const Decomposition dec = fitting_decompose(ModuleAction{b, n, ext.phi});
  InducedNilpotent out;
  out.dim_n = dec.v_n.dim();
  out.dim_0 = dec.v_0.dim();
  out.basis = dec.basis;
  out.normalized = change_basis(ext, dec.basis, Matrix::identity(m));
  const std::size_t n1 = out.dim_n, n0 = out.dim_0;
  const ExtensionData& e = out.normalized;

  // d(lambda)(e_i,e_j) = A''_i l_j - A''_j l_i - lambda([e_i,e_j]) = -Omega''_ij,
  // unknown lambda(e_q)_r at q*n0 + r.
  std::vector<SparseVec> rows;
  Vector rhs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vector br = b.bracket(i, j);
      for (std::size_t r = 0; r < n0; ++r) {
        std::vector<SparseEntry> row;
        for (std::size_t s = 0; s < n0; ++s) {
          row.push_back({j * n0 + s, e.phi[i](n1 + r, n1 + s)});
          row.push_back({i * n0 + s, -e.phi[j](n1 + r, n1 + s)});
        }
        for (std::size_t q = 0; q < m; ++q)
          if (br[q] != 0) row.push_back({q * n0 + r, -br[q]});
        rows.push_back(sparse_from_pairs(std::move(row)));
        rhs.push_back(-e.Omega(i, j)[n1 + r]);
      }
    }
  const LinearSolution s = solve_sparse(rows, rhs, m * n0);
  if (!s.consistent) throw InconsistentSystem("the a_0-part of Omega is not a coboundary");
  for (std::size_t q = 0; q < m; ++q) {
    Vector l = zero_vector(n);
    for (std::size_t r = 0; r < n0; ++r) l[n1 + r] = s.particular[q * n0 + r];
    out.lambda.push_back(std::move(l));
  }

  ExtensionData ext_n(n1, m);
  ext_n.b_bracket = ext.b_bracket;
  ext_n.b_product = ext.b_product;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t r = 0; r < n1; ++r)
      for (std::size_t c = 0; c < n1; ++c) ext_n.phi[i](r, c) = e.phi[i](r, c);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t r = 0; r < n1; ++r) ext_n.omega[i * m + j][r] = e.Omega(i, j)[r];
  }
  validate_extension(ext_n);
  out.ext_n = std::move(ext_n);
  return out;
}

LiftData reduction_lift(const ExtensionData& ext, const LiftData& lift_n) {
  const InducedNilpotent ind = induced_nilpotent_extension(ext);
  if (auto c = check_lift_lsa(ind.ext_n, lift_n); !c)
    throw LiftCheckFailed("lift of the nilpotent extension fails " + c.condition);
  const std::size_t n = ext.dim_a, m = ext.dim_b, n1 = ind.dim_n;
  const ExtensionData& e = ind.normalized;

  LiftData t(n, m);  // on the extension with the shifted section
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t r = 0; r < n1; ++r)
      for (std::size_t c = 0; c < n1; ++c) {
        t.X[i](r, c) = lift_n.X[i](r, c);
        t.Y[i](r, c) = lift_n.Y[i](r, c);
      }
    for (std::size_t r = n1; r < n; ++r)
      for (std::size_t c = n1; c < n; ++c) t.Y[i](r, c) = e.phi[i](r, c);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t r = 0; r < n1; ++r) t.omega(i, j)[r] = lift_n.omega(i, j)[r];
  }

  // Transport along (a,x) -> (a + lambda x, x):
  // omega(x,y) = omega~(x,y) - X(y) lambda(x) - Y(x) lambda(y) + lambda(x.y).
  LiftData l = t;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vector w = t.omega(i, j) - t.X[j] * ind.lambda[i] - t.Y[i] * ind.lambda[j];
      const Vector xy = ext.b_product(i, j);
      for (std::size_t q = 0; q < m; ++q)
        if (xy[q] != 0) axpy(w, xy[q], ind.lambda[q]);
      l.omega(i, j) = std::move(w);
    }
  return change_basis(l, inverse(ind.basis), Matrix::identity(m));
}

AlgebraProduct prop57_construct(const LieAlgebra& g) {
  TwoStepSplit split;
  try {
    split = two_step_solvable_from(g);
  } catch (const NotTwoStepSolvable&) {
    throw HypothesisFailed("g is not 2-step solvable");
  }
  if (lower_central_term(g, 5) != lower_central_term(g, 4)) throw HypothesisFailed("g^5 differs from g^4");
  const InducedNilpotent ind = induced_nilpotent_extension(split.ext);
  LiftData lift_n;
  try {
    lift_n = scheuneman_lift(ind.ext_n);
  } catch (const HypothesisFailed& e) {
    throw HypothesisFailed(std::string("the induced nilpotent extension has class above 3: ") + e.what());
  }
  const LiftData lift = reduction_lift(split.ext, lift_n);
  if (auto c = check_lift_lsa(split.ext, lift); !c) throw InternalError("reduction lift fails " + c.condition);
  const AlgebraProduct p = change_basis(lift_product(split.ext, lift), inverse(split.basis));
  if (!is_left_symmetric(p) || !is_compatible(p, g)) throw InternalError("transported product is not an LSA on g");
  if (is_complete(p).verdict == Completeness::Verdict::Incomplete) throw InternalError("constructed LSA is not complete");
  return p;
}

}  // namespace novikov
