#include "novikov/extension.hpp"

#include "novikov/error.hpp"

namespace novikov {

ExtensionData::ExtensionData(std::size_t n, std::size_t m)
    : dim_a(n), dim_b(m), b_bracket(m), b_product(m), a_product(n), phi(m, Matrix(n, n)), omega(m * m, zero_vector(n)) {}

void ExtensionData::set_Omega(std::size_t i, std::size_t j, const Vector& v) {
  omega[i * dim_b + j] = v;
  omega[j * dim_b + i] = Scalar(-1) * v;
}

Matrix ExtensionData::phi_of(const Vector& x) const {
  Matrix out(dim_a, dim_a);
  for (std::size_t k = 0; k < dim_b; ++k)
    if (x[k] != 0) out += x[k] * phi[k];
  return out;
}

Vector ExtensionData::Omega_of(const Vector& x, const Vector& y) const {
  Vector out = zero_vector(dim_a);
  for (std::size_t i = 0; i < dim_b; ++i)
    for (std::size_t j = 0; j < dim_b; ++j)
      if (x[i] != 0 && y[j] != 0) axpy(out, x[i] * y[j], Omega(i, j));
  return out;
}

LiftData::LiftData(std::size_t n, std::size_t m) : X(m, Matrix(n, n)), Y(m, Matrix(n, n)), x(m * m, zero_vector(n)) {}

namespace {

std::string idx(std::initializer_list<std::size_t> ids) {
  std::string s = "(";
  bool first = true;
  for (auto i : ids) {
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + ")";
}

Matrix combine(const std::vector<Matrix>& ms, const Vector& v, std::size_t n) {
  Matrix out(n, n);
  for (std::size_t k = 0; k < ms.size(); ++k)
    if (v[k] != 0) out += v[k] * ms[k];
  return out;
}

Vector omega_of(const LiftData& l, const Vector& u, const Vector& w, std::size_t n) {
  Vector out = zero_vector(n);
  const std::size_t m = l.dim_b();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (u[i] != 0 && w[j] != 0) axpy(out, u[i] * w[j], l.omega(i, j));
  return out;
}

void check_sizes(const ExtensionData& e) {
  const std::size_t n = e.dim_a, m = e.dim_b;
  bool ok = e.phi.size() == m && e.omega.size() == m * m && e.b_bracket.dim() == m && e.b_product.dim() == m &&
            e.a_product.dim() == n;
  for (const auto& a : e.phi) ok = ok && a.rows() == n && a.cols() == n;
  for (const auto& v : e.omega) ok = ok && v.size() == n;
  if (!ok) throw InputError("extension data has inconsistent dimensions");
}

void check_sizes(const ExtensionData& e, const LiftData& l) {
  check_sizes(e);
  const std::size_t n = e.dim_a, m = e.dim_b;
  bool ok = l.X.size() == m && l.Y.size() == m && l.x.size() == m * m;
  for (std::size_t i = 0; ok && i < m; ++i)
    ok = l.X[i].rows() == n && l.X[i].cols() == n && l.Y[i].rows() == n && l.Y[i].cols() == n;
  for (const auto& v : l.x) ok = ok && v.size() == n;
  if (!ok) throw InputError("lift data does not match the extension");
}

}  // namespace

std::optional<std::string> extension_violation(const ExtensionData& e) {
  check_sizes(e);
  const std::size_t n = e.dim_a, m = e.dim_b;
  if (auto v = find_lie_violation(e.b_bracket)) return "b-bracket is not a Lie bracket at " + idx({v->triple[0], v->triple[1], v->triple[2]});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (e.phi_of(e.b_bracket.apply(i, j)) != commutator(e.phi[i], e.phi[j]))
        return "phi-representation fails at " + idx({i, j});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      if (e.Omega(i, j) + e.Omega(j, i) != zero_vector(n)) return "omega-antisymmetry fails at " + idx({i, j});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        const Vector lhs = e.phi[i] * e.Omega(j, k) - e.phi[j] * e.Omega(i, k) + e.phi[k] * e.Omega(i, j);
        const Vector ek = unit_vector(m, k), ej = unit_vector(m, j), ei = unit_vector(m, i);
        const Vector rhs = e.Omega_of(e.b_bracket.apply(i, j), ek) - e.Omega_of(e.b_bracket.apply(i, k), ej) +
                           e.Omega_of(e.b_bracket.apply(j, k), ei);
        if (lhs != rhs) return "omega-cocycle fails at " + idx({i, j, k});
      }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s)
      if (e.a_product(r, s) != e.a_product(s, r)) return "a-product-commutative fails at " + idx({r, s});
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t)
        if (e.a_product(e.a_product(r, s), unit_vector(n, t)) != e.a_product(unit_vector(n, r), e.a_product(s, t)))
          return "a-product-associative fails at " + idx({r, s, t});
  return std::nullopt;
}

void validate_extension(const ExtensionData& ext) {
  if (auto v = extension_violation(ext)) throw InvariantViolation(*v);
}

LieAlgebra assemble(const ExtensionData& e) {
  validate_extension(e);
  const std::size_t n = e.dim_a, m = e.dim_b;
  StructureTensor t(n + m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t r = 0; r < n; ++r) {
        const Scalar& c = e.phi[i](r, s);
        if (c == 0) continue;
        t.set(n + i, s, r, c);
        t.set(s, n + i, r, -c);
      }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      SparseVec cell = to_sparse(e.Omega(i, j));
      for (const auto& en : e.b_bracket.cell(i, j)) cell.push_back({n + en.index, en.value});
      t.set_cell(n + i, n + j, std::move(cell));
    }
  std::vector<std::string> labels = default_labels(n, "a");
  for (const auto& l : default_labels(m, "b")) labels.push_back(l);
  return validate_lie(std::move(t), std::move(labels));
}

TwoStepSplit two_step_solvable_from(const LieAlgebra& g) {
  const Subspace whole = Subspace::full(g.dim());
  const Subspace d = bracket_space(g, whole, whole);
  if (!bracket_space(g, d, d).is_zero()) throw NotTwoStepSolvable("[[g,g],[g,g]] is nonzero");
  const std::size_t n = d.dim();
  const auto section = standard_complement(d);
  const std::size_t m = section.size();
  ExtensionData ext(n, m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vector tau = unit_vector(g.dim(), section[i]);
    for (std::size_t s = 0; s < n; ++s) {
      const Vector c = d.coordinates(g.bracket(tau, d.basis()[s]));
      for (std::size_t r = 0; r < n; ++r) ext.phi[i](r, s) = c[r];
    }
    for (std::size_t j = 0; j < m; ++j) ext.omega[i * m + j] = d.coordinates(g.bracket(section[i], section[j]));
  }
  std::vector<Vector> cols = d.basis();
  for (auto c : section) cols.push_back(unit_vector(g.dim(), c));
  TwoStepSplit out{std::move(ext), Matrix::from_columns(cols, g.dim()), section};
  if (assemble(out.ext).structure() != g.structure().change_basis(out.basis))
    throw InternalError("split does not reproduce the bracket");
  return out;
}

AlgebraProduct lift_product(const ExtensionData& e, const LiftData& l) {
  check_sizes(e, l);
  const std::size_t n = e.dim_a, m = e.dim_b;
  StructureTensor t(n + m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) t.set_cell(r, s, e.a_product.tensor().cell(r, s));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t r = 0; r < n; ++r) {
      t.set_cell(r, n + j, to_sparse(l.X[j].column(r)));
      t.set_cell(n + j, r, to_sparse(l.Y[j].column(r)));
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      SparseVec cell = to_sparse(l.omega(i, j));
      for (const auto& en : e.b_product.tensor().cell(i, j)) cell.push_back({n + en.index, en.value});
      t.set_cell(n + i, n + j, std::move(cell));
    }
  return AlgebraProduct(std::move(t));
}

namespace {

CheckResult lsa_components(const ExtensionData& e, const LiftData& l) {
  const std::size_t n = e.dim_a, m = e.dim_b;
  const AlgebraProduct& mu = e.a_product;
  const AlgebraProduct& nu = e.b_product;
  auto ea = [n](std::size_t r) { return unit_vector(n, r); };
  auto eb = [m](std::size_t i) { return unit_vector(m, i); };

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (nu(i, j) - nu(j, i) != e.b_bracket.apply(i, j)) return CheckResult::fail("b-product-compatible", {i, j});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      if (l.omega(i, j) - l.omega(j, i) != e.Omega(i, j)) return CheckResult::fail("omega-skew", {i, j});
  for (std::size_t i = 0; i < m; ++i)
    if (l.Y[i] - l.X[i] != e.phi[i]) return CheckResult::fail("phi-difference", {i});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Vector lhs = l.Y[i] * l.omega(j, k) - l.Y[j] * l.omega(i, k) - l.X[k] * e.Omega(i, j);
        const Vector rhs = omega_of(l, eb(j), nu(i, k), n) - omega_of(l, eb(i), nu(j, k), n) +
                           omega_of(l, e.b_bracket.apply(i, j), eb(k), n);
        if (lhs != rhs) return CheckResult::fail("omega-phi2-cocycle", {i, j, k});
      }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      const Matrix lhs = mu.right(l.omega(j, k)) + combine(l.X, nu(j, k), n);
      const Matrix rhs = l.Y[j] * l.X[k] - l.X[k] * e.phi[j];
      if (lhs != rhs) return CheckResult::fail("a-omega-phi1", {j, k});
    }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = r + 1; s < n; ++s)
        if (mu(ea(r), l.X[k] * ea(s)) != mu(ea(s), l.X[k] * ea(r)))
          return CheckResult::fail("a-phi1-symmetric", {k, r, s});
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t t = 0; t < n; ++t)
        if (l.Y[j] * mu(r, t) - mu(ea(r), l.Y[j] * ea(t)) != mu(e.phi[j] * ea(r), ea(t)))
          return CheckResult::fail("phi2-derivation", {j, r, t});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (commutator(l.Y[i], l.Y[j]) - combine(l.Y, e.b_bracket.apply(i, j), n) != mu.left(e.Omega(i, j)))
        return CheckResult::fail("phi2-representation", {i, j});
  if (auto r = is_left_symmetric(nu); !r) return CheckResult::fail("b-product-left-symmetric", r.witness);
  return CheckResult::pass();
}

CheckResult novikov_components(const ExtensionData& e, const LiftData& l) {
  const std::size_t n = e.dim_a, m = e.dim_b;
  const AlgebraProduct& mu = e.a_product;
  const AlgebraProduct& nu = e.b_product;
  auto ea = [n](std::size_t r) { return unit_vector(n, r); };
  auto eb = [m](std::size_t i) { return unit_vector(m, i); };

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        const Vector lhs = l.X[k] * l.omega(i, j) - l.X[j] * l.omega(i, k);
        const Vector rhs = omega_of(l, nu(i, k), eb(j), n) - omega_of(l, nu(i, j), eb(k), n);
        if (lhs != rhs) return CheckResult::fail("phi1-omega-right", {i, j, k});
      }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (mu.left(l.omega(i, j)) + combine(l.Y, nu(i, j), n) != l.X[j] * l.Y[i])
        return CheckResult::fail("omega-phi2-right", {i, j});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!commutator(l.X[i], l.X[j]).is_zero()) return CheckResult::fail("phi1-commute", {i, j});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = r + 1; s < n; ++s)
        if (mu(l.Y[i] * ea(r), ea(s)) != mu(l.Y[i] * ea(s), ea(r)))
          return CheckResult::fail("phi2-a-symmetric", {i, r, s});
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s)
        if (l.X[k] * mu(r, s) != mu(l.X[k] * ea(r), ea(s))) return CheckResult::fail("phi1-a-product", {k, r, s});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        if (nu(nu(i, j), eb(k)) != nu(nu(i, k), eb(j))) return CheckResult::fail("b-product-novikov", {i, j, k});
  return CheckResult::pass();
}

}  // namespace

CheckResult check_lift_lsa(const ExtensionData& ext, const LiftData& lift) {
  check_sizes(ext, lift);
  validate_extension(ext);
  return lsa_components(ext, lift);
}

CheckResult check_trivial_novikov_system(const ExtensionData& e, const LiftData& l, bool lsa_only) {
  check_sizes(e, l);
  if (!e.b_abelian() || !e.trivial_products())
    throw PreconditionFailed("the abelian system needs an abelian b and trivial products");
  const std::size_t m = e.dim_b;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (l.omega(i, j) - l.omega(j, i) != e.Omega(i, j)) return CheckResult::fail("x-skew", {i, j});
  for (std::size_t i = 0; i < m; ++i)
    if (l.X[i] + e.phi[i] != l.Y[i]) return CheckResult::fail("y-definition", {i});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (l.Y[i] * l.omega(j, k) - l.Y[j] * l.omega(i, k) != l.X[k] * e.Omega(i, j))
          return CheckResult::fail("y-x-cocycle", {i, j, k});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (l.X[i] * e.phi[j] - e.phi[j] * l.X[i] != l.X[j] * l.X[i]) return CheckResult::fail("x-a-commutator", {i, j});
  if (lsa_only) return CheckResult::pass();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (l.X[k] * l.omega(i, j) != l.X[j] * l.omega(i, k)) return CheckResult::fail("x-omega-symmetric", {i, j, k});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!(l.X[i] * l.Y[j]).is_zero()) return CheckResult::fail("x-y-vanish", {i, j});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (l.X[i] * l.X[j] != l.X[j] * l.X[i]) return CheckResult::fail("x-commute", {i, j});
  return CheckResult::pass();
}

CheckResult check_lift_novikov(const ExtensionData& ext, const LiftData& lift) {
  CheckResult general = check_lift_lsa(ext, lift);
  if (general) general = novikov_components(ext, lift);
  if (!ext.b_abelian() || !ext.trivial_products()) return general;
  CheckResult abelian = check_trivial_novikov_system(ext, lift);
  if (abelian.holds != general.holds)
    throw InternalError("the general and the abelian lift systems disagree (" + general.condition + " vs " +
                        abelian.condition + ")");
  if (abelian)
    for (std::size_t i = 0; i < ext.dim_b; ++i)
      for (std::size_t j = i + 1; j < ext.dim_b; ++j)
        if (!commutator(lift.Y[i], lift.Y[j]).is_zero()) throw InternalError("phi_2 images fail to commute");
  return abelian;
}

ExtensionData change_basis(const ExtensionData& e, const Matrix& c, const Matrix& f) {
  check_sizes(e);
  const Matrix ci = inverse(c);
  const std::size_t n = e.dim_a, m = e.dim_b;
  ExtensionData out(n, m);
  out.b_bracket = e.b_bracket.change_basis(f);
  out.b_product = change_basis(e.b_product, f);
  out.a_product = change_basis(e.a_product, c);
  for (std::size_t i = 0; i < m; ++i) out.phi[i] = ci * e.phi_of(f.column(i)) * c;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.omega[i * m + j] = ci * e.Omega_of(f.column(i), f.column(j));
  return out;
}

LiftData change_basis(const LiftData& l, const Matrix& c, const Matrix& f) {
  const Matrix ci = inverse(c);
  const std::size_t n = c.rows(), m = l.dim_b();
  LiftData out(n, m);
  for (std::size_t i = 0; i < m; ++i) {
    out.X[i] = ci * combine(l.X, f.column(i), n) * c;
    out.Y[i] = ci * combine(l.Y, f.column(i), n) * c;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.omega(i, j) = ci * omega_of(l, f.column(i), f.column(j), n);
  return out;
}

}  // namespace novikov
