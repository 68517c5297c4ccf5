#include "novikov/certificate.hpp"

#include <functional>
#include <map>
#include <optional>

#include "novikov/error.hpp"
#include "novikov/extension.hpp"
#include "novikov/lift_constructions.hpp"

namespace novikov {

std::string to_string(Certificate::Verdict v) {
  switch (v) {
    case Certificate::Verdict::Exists: return "Exists";
    case Certificate::Verdict::NotExists: return "NotExists";
    case Certificate::Verdict::Undetermined: return "Undetermined";
  }
  return "";
}

AlgebraProduct product_from_entries(const PolySystem& s, const Vector& x) {
  const std::size_t n = s.dim;
  StructureTensor t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) t.set(i, j, k, x[s.var(i, k, j)]);
  return AlgebraProduct(std::move(t));
}

namespace {

struct Found {
  AlgebraProduct product;
  std::string method;
};

bool novikov_on(const AlgebraProduct& p, const LieAlgebra& g) { return is_novikov(p) && is_compatible(p, g); }

std::optional<Found> try_constructors(const LieAlgebra& g) {
  if (g.is_abelian()) return Found{AlgebraProduct(g.dim()), "zero-product"};
  if (auto c = nilpotency_class(g); c && *c <= 2) return Found{half_bracket(g), "half-bracket"};

  TwoStepSplit split;
  try {
    split = two_step_solvable_from(g);
  } catch (const NotTwoStepSolvable&) {
    return std::nullopt;
  }
  const ExtensionData& ext = split.ext;
  std::vector<std::pair<std::string, std::function<LiftData()>>> candidates;
  if (ext.dim_b == 2) candidates.push_back({"two-generator", [&] { return two_gen_lift(ext); }});
  for (std::size_t x = 0; x < ext.dim_b; ++x)
    candidates.push_back({"jordan", [&, x] { return jordan_lift(ext, x); }});
  for (std::size_t e = 0; e < ext.dim_b; ++e)
    candidates.push_back({"iso", [&, e] { return iso_lift(ext, unit_vector(ext.dim_b, e)); }});
  candidates.push_back({"scheuneman", [&] { return scheuneman_lift(ext); }});

  const Matrix back = inverse(split.basis);
  for (auto& [name, make] : candidates) {
    LiftData lift;
    try {
      lift = make();
    } catch (const HypothesisFailed&) {
      continue;
    } catch (const PreconditionFailed&) {
      continue;
    } catch (const NotInvertible&) {
      continue;
    } catch (const NotRegularNilpotent&) {
      continue;
    } catch (const GammaExpansionFailed&) {
      continue;
    }
    if (!check_lift_novikov(ext, lift)) continue;
    AlgebraProduct p = change_basis(lift_product(ext, lift), back);
    if (!novikov_on(p, g)) throw InternalError(name + " lift passed its checker but the product is not Novikov");
    return Found{std::move(p), name};
  }
  return std::nullopt;
}

Parametrization parametrize(const LinearSolution& sol) {
  Parametrization p;
  p.free = sol.free;
  p.particular = to_sparse(sol.particular);
  p.directions = sol.directions;
  return p;
}

struct Row {
  Poly poly;
  SparseVec combo;
};

/// Forward elimination on leading monomials; returns a row reduced to a
/// nonzero constant, if one appears within the budget.
std::optional<Row> eliminate(std::vector<Row> rows, std::size_t effort, std::size_t& steps) {
  auto cmp = [](const Monomial& a, const Monomial& b) { return graded_less(a, b); };
  std::map<Monomial, Row, decltype(cmp)> pivots(cmp);
  for (auto& row : rows) {
    while (!row.poly.empty()) {
      const Monomial lead = row.poly.front().mono;
      if (lead.degree() == 0) return row;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        const Scalar inv = 1 / row.poly.front().coeff;
        for (auto& t : row.poly) t.coeff *= inv;
        for (auto& e : row.combo) e.value *= inv;
        pivots.emplace(lead, std::move(row));
        break;
      }
      if (++steps > effort) return std::nullopt;
      const Scalar f = row.poly.front().coeff;
      row.poly = poly_axpy(row.poly, -f, it->second.poly);
      row.combo = sparse_sub(row.combo, f, it->second.combo);
    }
  }
  return std::nullopt;
}

Scalar dot(const SparseVec& a, const SparseVec& b) {
  Scalar s(0);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].index < b[j].index) ++i;
    else if (b[j].index < a[i].index) ++j;
    else s += a[i++].value * b[j++].value;
  }
  return s;
}

}  // namespace

Certificate decide_novikov(const LieAlgebra& g, std::size_t effort) {
  Certificate c;
  c.algebra_hash = tensor_hash(g.structure());
  c.dim = g.dim();

  if (auto f = try_constructors(g)) {
    c.verdict = Certificate::Verdict::Exists;
    c.product = std::move(f->product);
    c.method = f->method;
    return c;
  }

  const PolySystem sys = build_system(g);
  const LinearSolution sol = solve_sparse(sys.all_linear_rows(), sys.all_linear_rhs(), sys.nvars);
  if (!sol.consistent) {
    c.verdict = Certificate::Verdict::NotExists;
    c.method = "linear-block";
    c.witness = Certificate::Witness::LinearCombination;
    c.linear_combination = to_sparse(sol.witness);
    return c;
  }

  const Parametrization param = parametrize(sol);
  const std::vector<Poly> residuals = substitute(sys.quadratic, param);
  std::vector<Row> rows;
  bool origin_solves = true;
  for (std::size_t q = 0; q < residuals.size(); ++q) {
    if (residuals[q].empty()) continue;
    if (constant_term(residuals[q]) != 0) origin_solves = false;
    rows.push_back({residuals[q], {{q, Scalar(1)}}});
  }
  if (origin_solves) {
    AlgebraProduct p = product_from_entries(sys, sol.particular);
    if (!novikov_on(p, g)) throw InternalError("particular solution of the system is not a Novikov product");
    c.verdict = Certificate::Verdict::Exists;
    c.product = std::move(p);
    c.method = "linear-solution";
    return c;
  }

  std::optional<Row> hit;
  for (const auto& row : rows)
    if (is_constant(row.poly)) {
      hit = row;
      break;
    }
  std::size_t steps = 0;
  if (!hit) hit = eliminate(rows, effort, steps);
  if (hit) {
    c.verdict = Certificate::Verdict::NotExists;
    c.method = steps == 0 ? "constant-residual" : "elimination";
    c.witness = Certificate::Witness::ConstantResidual;
    c.param = param;
    c.combination = hit->combo;
    c.constant = constant_term(hit->poly);
    c.steps = steps;
    return c;
  }
  c.verdict = Certificate::Verdict::Undetermined;
  c.method = "budget-exhausted";
  c.residuals = rows.size();
  c.steps = steps;
  return c;
}

bool verify_certificate(const LieAlgebra& g, const Certificate& c) {
  if (c.verdict == Certificate::Verdict::Undetermined) return false;
  if (c.verdict == Certificate::Verdict::Exists) {
    return c.algebra_hash == tensor_hash(g.structure()) && c.dim == g.dim() && c.product.dim() == g.dim() &&
           novikov_on(c.product, g);
  }
  return verify_certificate(g, build_system(g), c);
}

bool verify_certificate(const LieAlgebra& g, const PolySystem& sys, const Certificate& c) {
  if (c.algebra_hash != tensor_hash(g.structure()) || c.dim != g.dim() || sys.dim != g.dim()) return false;
  switch (c.verdict) {
    case Certificate::Verdict::Undetermined: return false;
    case Certificate::Verdict::Exists: return c.product.dim() == g.dim() && novikov_on(c.product, g);
    case Certificate::Verdict::NotExists: break;
  }
  const std::vector<SparseVec> rows = sys.all_linear_rows();
  const Vector rhs = sys.all_linear_rhs();

  if (c.witness == Certificate::Witness::LinearCombination) {
    if (c.linear_combination.empty() || c.linear_combination.back().index >= rows.size()) return false;
    SparseVec combined;
    Scalar value(0);
    for (const auto& e : c.linear_combination) {
      combined = sparse_sub(combined, -e.value, rows[e.index]);
      value += e.value * rhs[e.index];
    }
    return combined.empty() && value != 0;
  }
  if (c.witness != Certificate::Witness::ConstantResidual) return false;

  const Parametrization& p = c.param;
  if (p.free.size() != p.directions.size()) return false;
  for (std::size_t f = 0; f < p.free.size(); ++f)
    if (p.free[f] >= sys.nvars || (f > 0 && p.free[f] <= p.free[f - 1])) return false;
  auto in_range = [&](const SparseVec& v) { return v.empty() || v.back().index < sys.nvars; };
  if (!in_range(p.particular)) return false;
  for (const auto& d : p.directions)
    if (!in_range(d)) return false;
  for (std::size_t f = 0; f < p.free.size(); ++f) {
    if (sparse_get(p.particular, p.free[f]) != 0) return false;
    for (std::size_t h = 0; h < p.free.size(); ++h)
      if (sparse_get(p.directions[f], p.free[h]) != Scalar(f == h ? 1 : 0)) return false;
  }
  if (p.free.size() != sys.nvars - sparse_rank(rows, sys.nvars)) return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (dot(rows[r], p.particular) != rhs[r]) return false;
    for (const auto& d : p.directions)
      if (dot(rows[r], d) != 0) return false;
  }

  if (c.combination.empty() || c.combination.back().index >= sys.quadratic.size() || c.constant == 0) return false;
  Poly total;
  std::vector<Poly> picked;
  for (const auto& e : c.combination) picked.push_back(sys.quadratic[e.index]);
  const std::vector<Poly> subs = substitute(picked, p);
  for (std::size_t k = 0; k < subs.size(); ++k) total = poly_axpy(total, c.combination[k].value, subs[k]);
  return is_constant(total) && constant_term(total) == c.constant;
}

}  // namespace novikov
