#include "novikov/rmatrix.hpp"

#include "novikov/error.hpp"

namespace novikov {

RMatrix::RMatrix(LieAlgebra g_, Matrix t_) : g(std::move(g_)), t(std::move(t_)) {
  if (t.rows() != g.dim() || t.cols() != g.dim()) throw InputError("r-matrix size does not match the algebra");
}

StructureTensor deformed_bracket(const RMatrix& r) {
  const std::size_t n = r.g.dim();
  StructureTensor out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = r.g.bracket(r.t.column(i), unit_vector(n, j)) + r.g.bracket(unit_vector(n, i), r.t.column(j));
      out.set_cell(i, j, to_sparse(v));
    }
  return out;
}

LieAlgebra deformed_lie(const RMatrix& r) { return validate_lie(deformed_bracket(r)); }

CheckResult check_cybe(const RMatrix& r) {
  const std::size_t n = r.g.dim();
  const StructureTensor d = deformed_bracket(r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r.g.bracket(r.t.column(i), r.t.column(j)) != r.t * d.apply(i, j))
        return CheckResult::fail("classical-yang-baxter", {i, j});
  return CheckResult::pass();
}

CheckResult check_novbed(const RMatrix& r) {
  const std::size_t n = r.g.dim();
  // u(a,k) = T([e_a, T e_k])
  std::vector<Vector> u(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < n; ++k) u[a * n + k] = r.t * r.g.bracket(unit_vector(n, a), r.t.column(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (r.g.bracket(unit_vector(n, i), u[j * n + k]) != r.g.bracket(unit_vector(n, j), u[i * n + k]))
          return CheckResult::fail("novikov-condition", {i, j, k});
  return CheckResult::pass();
}

AlgebraProduct induced_product(const RMatrix& r) {
  if (auto c = check_cybe(r); !c) throw PreconditionFailed("T does not satisfy the classical Yang-Baxter equation");
  if (auto c = check_novbed(r); !c) throw PreconditionFailed("T does not satisfy the Novikov condition");
  const std::size_t n = r.g.dim();
  StructureTensor p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.set_cell(i, j, to_sparse(r.g.bracket(r.t.column(i), unit_vector(n, j))));
  // T is a homomorphism from the deformed bracket to the original one.
  const StructureTensor d = deformed_bracket(r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r.t * d.apply(i, j) != r.g.bracket(r.t.column(i), r.t.column(j)))
        throw InternalError("T is not a homomorphism of the deformed bracket");
  return AlgebraProduct(std::move(p));
}

RMatrix basis_rmatrix(const LieAlgebra& g, std::size_t l, std::size_t m) {
  const std::size_t n = g.dim();
  if (l >= n || m >= n) throw InputError("basis index out of range");
  for (std::size_t i = 0; i < n; ++i)
    if (g.bracket(i, m)[l] != 0)
      throw HypothesisFailed("[" + g.labels()[i] + "," + g.labels()[m] + "] has a nonzero " + g.labels()[l] +
                             "-coefficient");
  return RMatrix(g, Matrix::unit(n, n, m, l));
}

Matrix sl2_family(const Scalar& a, const Scalar& b) {
  return Matrix(3, 3, {a, Scalar(1), 2 * b, a * a, a, 2 * a * b, a * b, b, 2 * b * b});
}

ClassBounds class_bounds_report(const RMatrix& r) {
  const LieAlgebra gt = deformed_lie(r);
  ClassBounds c;
  c.nil_class_g = nilpotency_class(r.g);
  c.nil_class_gT = nilpotency_class(gt);
  c.solv_class_g = derived_length(r.g);
  c.solv_class_gT = derived_length(gt);
  if (c.nil_class_g) c.nilpotent_bound_holds = c.nil_class_gT && *c.nil_class_gT <= *c.nil_class_g;
  if (c.solv_class_g) c.solvable_bound_holds = c.solv_class_gT && *c.solv_class_gT <= *c.solv_class_g;
  if (!c.nilpotent_bound_holds) throw InvariantViolation("nilpotency class of the deformed algebra exceeds that of g");
  if (!c.solvable_bound_holds) throw InvariantViolation("derived length of the deformed algebra exceeds that of g");
  return c;
}

}  // namespace novikov
