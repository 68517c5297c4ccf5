#include "novikov/poly.hpp"

#include <algorithm>
#include <map>

namespace novikov {

bool graded_less(const Monomial& x, const Monomial& y) {
  if (x.degree() != y.degree()) return x.degree() > y.degree();
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

Poly poly_from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& l, const Term& r) { return graded_less(l.mono, r.mono); });
  Poly out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

Poly poly_axpy(const Poly& p, const Scalar& f, const Poly& q) {
  Poly out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < q.size()) {
    if (j == q.size() || (i < p.size() && graded_less(p[i].mono, q[j].mono))) {
      out.push_back(p[i++]);
    } else if (i == p.size() || graded_less(q[j].mono, p[i].mono)) {
      out.push_back({q[j].mono, f * q[j].coeff});
      ++j;
    } else {
      Scalar c = p[i].coeff + f * q[j].coeff;
      if (c != 0) out.push_back({p[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

bool is_constant(const Poly& p) { return p.empty() || (p.size() == 1 && p[0].mono.degree() == 0); }

Scalar constant_term(const Poly& p) {
  if (!p.empty() && p.back().mono.degree() == 0) return p.back().coeff;
  return Scalar(0);
}

Poly affine_product(const Affine& x, const Affine& y) {
  std::vector<Term> terms;
  if (x.constant != 0 && y.constant != 0) terms.push_back({Monomial::constant(), x.constant * y.constant});
  if (y.constant != 0)
    for (const auto& e : x.linear) terms.push_back({Monomial::linear(e.index), e.value * y.constant});
  if (x.constant != 0)
    for (const auto& e : y.linear) terms.push_back({Monomial::linear(e.index), e.value * x.constant});
  for (const auto& u : x.linear)
    for (const auto& w : y.linear) terms.push_back({Monomial::quadratic(u.index, w.index), u.value * w.value});
  return poly_from_terms(std::move(terms));
}

std::vector<SparseVec> PolySystem::all_linear_rows() const {
  std::vector<SparseVec> rows = linear_rows;
  rows.insert(rows.end(), compat_rows.begin(), compat_rows.end());
  return rows;
}

Vector PolySystem::all_linear_rhs() const {
  Vector rhs = linear_rhs;
  rhs.insert(rhs.end(), compat_rhs.begin(), compat_rhs.end());
  return rhs;
}

PolySystem build_system(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  PolySystem s;
  s.dim = n;
  s.nvars = n * n * n;
  std::vector<Matrix> ad;
  for (std::size_t i = 0; i < n; ++i) ad.push_back(g.ad(i));
  auto v = [&](std::size_t i, std::size_t k, std::size_t j) { return static_cast<std::uint32_t>(s.var(i, k, j)); };

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      const Vector br = g.bracket(p, q);
      const Matrix adbr = g.ad(br);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
          std::vector<SparseEntry> row;
          for (std::size_t t = 0; t < n; ++t)
            if (br[t] != 0) row.push_back({v(t, k, j), br[t]});
          for (std::size_t t = 0; t < n; ++t) {
            if (ad[p](k, t) != 0) row.push_back({v(q, t, j), -ad[p](k, t)});
            if (ad[p](t, j) != 0) row.push_back({v(q, k, t), ad[p](t, j)});
            if (ad[q](t, j) != 0) row.push_back({v(p, k, t), -ad[q](t, j)});
            if (ad[q](k, t) != 0) row.push_back({v(p, t, j), ad[q](k, t)});
          }
          SparseVec r = sparse_from_pairs(std::move(row));
          Scalar rhs = -adbr(k, j);
          if (r.empty() && rhs == 0) continue;
          s.linear_rows.push_back(std::move(r));
          s.linear_rhs.push_back(std::move(rhs));
        }
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector br = g.bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        s.compat_rows.push_back(sparse_from_pairs({{v(i, k, j), Scalar(1)}, {v(j, k, i), Scalar(-1)}}));
        s.compat_rhs.push_back(br[k]);
      }
    }

  auto l_entry = [&](std::size_t i, std::size_t k, std::size_t j) { return Affine{{{v(i, k, j), Scalar(1)}}, Scalar(0)}; };
  auto r_entry = [&](std::size_t i, std::size_t k, std::size_t j) { return Affine{{{v(i, k, j), Scalar(1)}}, -ad[i](k, j)}; };
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      const Vector br = g.bracket(p, q);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
          std::vector<Term> ll, rr;
          for (std::size_t t = 0; t < n; ++t) {
            for (auto& term : affine_product(l_entry(p, k, t), l_entry(q, t, j))) ll.push_back(term);
            for (auto& term : affine_product(l_entry(q, k, t), l_entry(p, t, j)))
              ll.push_back({term.mono, -term.coeff});
            for (auto& term : affine_product(r_entry(p, k, t), r_entry(q, t, j))) rr.push_back(term);
            for (auto& term : affine_product(r_entry(q, k, t), r_entry(p, t, j)))
              rr.push_back({term.mono, -term.coeff});
          }
          for (std::size_t t = 0; t < n; ++t)
            if (br[t] != 0) ll.push_back({Monomial::linear(v(t, k, j)), -br[t]});
          Poly a = poly_from_terms(std::move(ll));
          Poly b = poly_from_terms(std::move(rr));
          if (!a.empty()) s.quadratic.push_back(std::move(a));
          if (!b.empty()) s.quadratic.push_back(std::move(b));
        }
    }
  return s;
}

namespace {

/// Affine forms of the substituted variables, built on first use.
class Substituter {
public:
  explicit Substituter(const Parametrization& param) : param_(param) {}

  Poly operator()(const Poly& p) {
    std::vector<Term> terms;
    for (const auto& t : p) {
      if (t.mono.degree() == 0) {
        terms.push_back(t);
        continue;
      }
      const Poly part = t.mono.degree() == 1 ? affine_product(form(t.mono.a), Affine{{}, Scalar(1)})
                                             : affine_product(form(t.mono.a), form(t.mono.b));
      for (const auto& q : part) terms.push_back({q.mono, q.coeff * t.coeff});
    }
    return poly_from_terms(std::move(terms));
  }

private:
  const Affine& form(std::uint32_t var) {
    auto it = forms_.find(var);
    if (it != forms_.end()) return it->second;
    Affine a{{}, sparse_get(param_.particular, var)};
    for (std::size_t f = 0; f < param_.directions.size(); ++f) {
      Scalar c = sparse_get(param_.directions[f], var);
      if (c != 0) a.linear.push_back({f, std::move(c)});
    }
    return forms_.emplace(var, std::move(a)).first->second;
  }

  const Parametrization& param_;
  std::map<std::uint32_t, Affine> forms_;
};

}  // namespace

Poly substitute(const Poly& p, const Parametrization& param) { return Substituter(param)(p); }

std::vector<Poly> substitute(const std::vector<Poly>& ps, const Parametrization& param) {
  Substituter sub(param);
  std::vector<Poly> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(sub(p));
  return out;
}

Scalar evaluate(const Poly& p, const Vector& x) {
  Scalar out(0);
  for (const auto& t : p) {
    Scalar c = t.coeff;
    if (t.mono.a != Monomial::kNone) c *= x[t.mono.a];
    if (t.mono.b != Monomial::kNone) c *= x[t.mono.b];
    out += c;
  }
  return out;
}

}  // namespace novikov
