#include "novikov/lift_constructions.hpp"

#include <algorithm>

#include "novikov/error.hpp"

namespace novikov {

namespace {

void require_abelian_trivial(const ExtensionData& ext, const char* who) {
  if (!ext.b_abelian()) throw PreconditionFailed(std::string(who) + " needs an abelian b");
  if (!ext.trivial_products()) throw PreconditionFailed(std::string(who) + " needs trivial products on a and b");
}

void require_products_vanish(const ExtensionData& ext) {
  for (std::size_t i = 0; i < ext.dim_b; ++i)
    for (std::size_t j = 0; j < ext.dim_b; ++j)
      if (!(ext.phi[i] * ext.phi[j]).is_zero())
        throw HypothesisFailed("A_" + std::to_string(i + 1) + " A_" + std::to_string(j + 1) + " is nonzero");
}

}  // namespace

LiftData scheuneman_lift(const ExtensionData& ext) {
  validate_extension(ext);
  require_abelian_trivial(ext, "scheuneman_lift");
  require_products_vanish(ext);
  const std::size_t n = ext.dim_a, m = ext.dim_b;
  LiftData l(n, m);
  for (std::size_t i = 0; i < m; ++i) {
    l.X[i] = make_scalar(-1, 3) * ext.phi[i];
    l.Y[i] = make_scalar(2, 3) * ext.phi[i];
    for (std::size_t j = 0; j < m; ++j) l.omega(i, j) = make_scalar(1, 2) * ext.Omega(i, j);
  }
  return l;
}

LiftData two_gen_lift(const ExtensionData& ext) {
  validate_extension(ext);
  if (ext.dim_b != 2) throw PreconditionFailed("two_gen_lift needs dim b = 2");
  require_abelian_trivial(ext, "two_gen_lift");
  require_products_vanish(ext);
  LiftData l(ext.dim_a, 2);
  l.X[0] = make_scalar(-1, 2) * ext.phi[0];
  l.Y[0] = l.X[0] + ext.phi[0];
  l.Y[1] = ext.phi[1];
  l.omega(1, 0) = Scalar(-1) * ext.Omega(0, 1);
  return l;
}

LiftData iso_lift(const ExtensionData& ext, const Vector& e) {
  validate_extension(ext);
  require_abelian_trivial(ext, "iso_lift");
  if (e.size() != ext.dim_b) throw InputError("iso_lift element has the wrong dimension");
  const Matrix inv = inverse(ext.phi_of(e));
  const std::size_t n = ext.dim_a, m = ext.dim_b;
  LiftData l(n, m);
  for (std::size_t i = 0; i < m; ++i) {
    l.Y[i] = ext.phi[i];
    for (std::size_t j = 0; j < m; ++j) l.omega(i, j) = inv * (ext.phi[i] * ext.Omega_of(e, unit_vector(m, j)));
  }
  return l;
}

Vector gamma_expansion(const Matrix& a) {
  const std::size_t n = a.rows();
  Vector g(n);
  for (std::size_t k = 0; k < n; ++k) g[k] = a(0, k);
  Matrix rebuilt(n, n), p = Matrix::identity(n);
  const Matrix j = Matrix::jordan_block(n);
  for (std::size_t k = 0; k < n; ++k) {
    rebuilt += g[k] * p;
    p = p * j;
  }
  if (rebuilt != a) throw GammaExpansionFailed("matrix is not a polynomial in J(n)");
  return g;
}

LiftData jordan_lift(const ExtensionData& ext, std::size_t x) {
  validate_extension(ext);
  require_abelian_trivial(ext, "jordan_lift");
  const std::size_t n = ext.dim_a, m = ext.dim_b;
  if (x >= m) throw InputError("jordan_lift index out of range");
  if (n == 0) return LiftData(0, m);

  // a-basis making A_x = J(n); b-basis with e_x first.
  const Matrix c = inverse(nilpotent_regular_basis(ext.phi[x]));
  std::vector<std::size_t> order{x};
  for (std::size_t i = 0; i < m; ++i)
    if (i != x) order.push_back(i);
  Matrix perm(m, m);
  for (std::size_t i = 0; i < m; ++i) perm(order[i], i) = 1;
  ExtensionData e1 = change_basis(ext, c, perm);
  const Matrix j = Matrix::jordan_block(n);
  if (e1.phi[0] != j) throw InternalError("normalized A_1 is not J(n)");

  std::vector<Vector> gamma;
  for (std::size_t i = 0; i < m; ++i) gamma.push_back(gamma_expansion(e1.phi[i]));
  for (std::size_t i = 0; i < m; ++i)
    if (gamma[i][0] != 0) return iso_lift(ext, unit_vector(m, order[i]));

  // e_i - gamma_(i,1) e_1 removes the linear term for i >= 2.
  Matrix shift = Matrix::identity(m);
  if (n > 1)
    for (std::size_t i = 1; i < m; ++i) shift(0, i) = -gamma[i][1];
  ExtensionData e2 = change_basis(e1, Matrix::identity(n), shift);

  const Matrix jt = j.transpose();
  for (std::size_t i = 0; i < m; ++i) {
    if (j * jt * e2.phi[i] != e2.phi[i]) throw InternalError("A_1 A_1^t A_j = A_j fails");
    for (std::size_t k = 0; k < m; ++k)
      if (e2.phi[i] * jt * e2.phi[k] != e2.phi[k] * jt * e2.phi[i])
        throw InternalError("A_i A_1^t A_j = A_j A_1^t A_i fails");
  }

  LiftData l(n, m);
  l.Y = e2.phi;
  for (std::size_t k = 1; k < m; ++k) l.omega(0, k) = e2.Omega(0, k);
  for (std::size_t i = 1; i < m; ++i)
    for (std::size_t k = i; k < m; ++k) l.omega(i, k) = jt * (e2.phi[i] * e2.Omega(0, k));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = i + 1; k < m; ++k) l.omega(k, i) = l.omega(i, k) - e2.Omega(i, k);

  // Back to the caller's bases.
  return change_basis(l, inverse(c), inverse(perm * shift));
}

SemidirectLift semidirect_lift(const ExtensionData& ext, const AlgebraProduct& b_product) {
  validate_extension(ext);
  const std::size_t n = ext.dim_a, m = ext.dim_b;
  for (const auto& v : ext.omega)
    if (!is_zero(v)) throw PreconditionFailed("semidirect_lift needs Omega = 0");
  if (!ext.a_product.tensor().is_zero()) throw PreconditionFailed("semidirect_lift needs a trivial a-product");
  if (b_product.dim() != m) throw InputError("b-product has the wrong dimension");
  if (!is_left_symmetric(b_product)) throw PreconditionFailed("b-product is not left-symmetric");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (b_product(i, j) - b_product(j, i) != ext.b_bracket.apply(i, j))
        throw PreconditionFailed("b-product is not compatible with the bracket of b");
  SemidirectLift out{ext, LiftData(n, m), true};
  out.ext.b_product = b_product;
  out.lift.Y = ext.phi;
  for (std::size_t i = 0; i < m && out.novikov_hypothesis; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!ext.phi_of(b_product(i, j)).is_zero()) {
        out.novikov_hypothesis = false;
        break;
      }
  return out;
}

AlgebraProduct novikov_ideal_quotient(const AlgebraProduct& p, const Subspace& ideal) {
  const std::size_t n = p.dim();
  if (ideal.ambient_dim() != n) throw InputError("ideal does not live in the product's space");
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& v : ideal.basis()) {
      const Vector e = unit_vector(n, i);
      if (!ideal.contains(p(e, v))) throw NotProductIdeal("e" + std::to_string(i + 1) + " times an ideal vector leaves it");
      if (!ideal.contains(p(v, e))) throw NotProductIdeal("an ideal vector times e" + std::to_string(i + 1) + " leaves it");
    }
  const auto comp = standard_complement(ideal);
  const Matrix proj = complement_projection(ideal, comp);
  StructureTensor t(comp.size());
  for (std::size_t a = 0; a < comp.size(); ++a)
    for (std::size_t b = 0; b < comp.size(); ++b) t.set_cell(a, b, to_sparse(proj * p(comp[a], comp[b])));
  return AlgebraProduct(std::move(t));
}

}  // namespace novikov
