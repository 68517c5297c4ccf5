#include "novikov/product.hpp"

#include <random>

#include "novikov/error.hpp"

namespace novikov {

namespace {

struct Operators {
  std::vector<Matrix> l, r;
  std::vector<Vector> cells;  // cells[i*n + j] = e_i e_j
};

Operators operators(const AlgebraProduct& p) {
  const std::size_t n = p.dim();
  Operators o;
  for (std::size_t i = 0; i < n; ++i) {
    o.l.push_back(p.left(i));
    o.r.push_back(p.right(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) o.cells.push_back(p(i, j));
  return o;
}

}  // namespace

CheckResult is_left_symmetric(const AlgebraProduct& p) {
  const std::size_t n = p.dim();
  const Operators o = operators(p);
  // assoc(i,j,k) = e_i(e_j e_k) - (e_i e_j)e_k
  auto assoc = [&](std::size_t i, std::size_t j, std::size_t k) {
    return o.l[i] * o.cells[j * n + k] - o.r[k] * o.cells[i * n + j];
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (i < j && assoc(i, j, k) != assoc(j, i, k)) return CheckResult::fail("left-symmetry", {i, j, k});
  return CheckResult::pass();
}

CheckResult is_novikov(const AlgebraProduct& p) {
  if (auto r = is_left_symmetric(p); !r) return r;
  const std::size_t n = p.dim();
  const Operators o = operators(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (o.r[k] * o.cells[i * n + j] != o.r[j] * o.cells[i * n + k])
          return CheckResult::fail("right-commutativity", {i, j, k});
  return CheckResult::pass();
}

CheckResult is_compatible(const AlgebraProduct& p, const LieAlgebra& g) {
  if (p.dim() != g.dim()) throw InputError("product and Lie algebra differ in dimension");
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = i; j < p.dim(); ++j)
      if (p(i, j) - p(j, i) != g.bracket(i, j)) return CheckResult::fail("compatibility", {i, j});
  return CheckResult::pass();
}

CheckResult right_multiplications_commute(const AlgebraProduct& p) {
  std::vector<Matrix> r;
  for (std::size_t i = 0; i < p.dim(); ++i) r.push_back(p.right(i));
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = i + 1; j < p.dim(); ++j)
      if (!commutator(r[i], r[j]).is_zero()) return CheckResult::fail("right-multiplications-commute", {i, j});
  return CheckResult::pass();
}

CheckResult left_is_representation(const AlgebraProduct& p) {
  std::vector<Matrix> l;
  for (std::size_t i = 0; i < p.dim(); ++i) l.push_back(p.left(i));
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = i + 1; j < p.dim(); ++j)
      if (p.left(p(i, j) - p(j, i)) != commutator(l[i], l[j]))
        return CheckResult::fail("left-representation", {i, j});
  return CheckResult::pass();
}

CheckResult linear_relation_holds(const AlgebraProduct& p, const LieAlgebra& g) {
  if (p.dim() != g.dim()) throw InputError("product and Lie algebra differ in dimension");
  const std::size_t n = p.dim();
  std::vector<Matrix> l, ad;
  for (std::size_t i = 0; i < n; ++i) {
    l.push_back(p.left(i));
    ad.push_back(g.ad(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector b = g.bracket(i, j);
      Matrix m = p.left(b) + g.ad(b) - commutator(ad[i], l[j]) - commutator(l[i], ad[j]);
      if (!m.is_zero()) return CheckResult::fail("linear-relation", {i, j});
    }
  return CheckResult::pass();
}

CheckResult derived_identities_hold(const AlgebraProduct& p) {
  const std::size_t n = p.dim();
  const Operators o = operators(p);
  auto br = [&](std::size_t a, std::size_t b) { return o.cells[a * n + b] - o.cells[b * n + a]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector first = o.r[k] * br(i, j) + o.r[i] * br(j, k) + o.r[j] * br(k, i);
        if (!is_zero(first)) return CheckResult::fail("commutator-right-identity", {i, j, k});
        Vector second = o.l[i] * br(j, k) + o.l[j] * br(k, i) + o.l[k] * br(i, j);
        if (!is_zero(second)) return CheckResult::fail("commutator-left-identity", {i, j, k});
      }
  return CheckResult::pass();
}

LieAlgebra commutator_lie(const AlgebraProduct& p, std::vector<std::string> labels) {
  if (auto r = is_left_symmetric(p); !r)
    throw NotLeftSymmetric("product is not left-symmetric at (" + std::to_string(r.witness[0] + 1) + "," +
                           std::to_string(r.witness[1] + 1) + "," + std::to_string(r.witness[2] + 1) + ")");
  return validate_lie(antisymmetrize(p.tensor()), std::move(labels));
}

std::vector<Vector> completeness_samples(std::size_t dim) {
  // mt19937 is fully specified by the standard; the distributions are not,
  // so coefficients are cut from raw outputs.
  std::mt19937 gen(20240917u);
  std::vector<Vector> out;
  for (std::size_t s = 0; s < kCompletenessSamples; ++s) {
    Vector v(dim);
    for (auto& c : v) {
      const long num = static_cast<long>(gen() % 9) - 4;
      const long den = static_cast<long>(gen() % 3) + 1;
      c = make_scalar(num, den);
    }
    out.push_back(std::move(v));
  }
  return out;
}

Completeness is_complete(const AlgebraProduct& p) {
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (!is_nilpotent(p.right(i))) return {Completeness::Verdict::Incomplete, unit_vector(n, i), true};
  if (is_novikov(p) || right_multiplications_commute(p)) return {Completeness::Verdict::Complete, std::nullopt, true};
  for (const Vector& x : completeness_samples(n))
    if (!is_nilpotent(p.right(x))) return {Completeness::Verdict::Incomplete, x, true};
  return {Completeness::Verdict::HeuristicUnknown, std::nullopt, false};
}

AlgebraProduct half_bracket(const LieAlgebra& g) {
  return AlgebraProduct(make_scalar(1, 2) * g.structure());
}

AlgebraProduct change_basis(const AlgebraProduct& p, const Matrix& basis) {
  return AlgebraProduct(p.tensor().change_basis(basis));
}

std::string to_string(Completeness::Verdict v) {
  switch (v) {
    case Completeness::Verdict::Complete: return "Complete";
    case Completeness::Verdict::Incomplete: return "Incomplete";
    case Completeness::Verdict::HeuristicUnknown: return "HeuristicUnknown";
  }
  return "";
}

}  // namespace novikov
