#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "novikov/lie.hpp"
#include "novikov/linalg.hpp"

namespace novikov {

/// Monomial of degree <= 2: variables a <= b, kNone marks an absent factor.
struct Monomial {
  static constexpr std::uint32_t kNone = 0xffffffffu;
  std::uint32_t a = kNone, b = kNone;

  static Monomial constant() { return {}; }
  static Monomial linear(std::uint32_t v) { return {v, kNone}; }
  static Monomial quadratic(std::uint32_t u, std::uint32_t v) { return u <= v ? Monomial{u, v} : Monomial{v, u}; }
  int degree() const { return (a != kNone) + (b != kNone); }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order: degree 2 first, then degree 1, constant last; ties by
/// variable index.
bool graded_less(const Monomial& x, const Monomial& y);

struct Term {
  Monomial mono;
  Scalar coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial of degree <= 2, terms sorted by graded_less, no zeros.
using Poly = std::vector<Term>;

Poly poly_from_terms(std::vector<Term> terms);
/// p + f*q
Poly poly_axpy(const Poly& p, const Scalar& f, const Poly& q);
bool is_constant(const Poly& p);
Scalar constant_term(const Poly& p);

/// Affine form c + sum v_i x_i.
struct Affine {
  SparseVec linear;
  Scalar constant;
};
Poly affine_product(const Affine& x, const Affine& y);

/// Unknowns are the n^3 entries of L(e_i); variable (i*n + k)*n + j is the
/// k-th coordinate of e_i.e_j, i.e. L(e_i)_(k,j).
struct PolySystem {
  std::size_t dim = 0;
  std::size_t nvars = 0;
  /// L([x,y]) + ad([x,y]) - [ad x, L y] - [L x, ad y] = 0 on pairs x < y.
  std::vector<SparseVec> linear_rows;
  Vector linear_rhs;
  /// L(e_i)e_j - L(e_j)e_i = [e_i,e_j] on pairs i < j.
  std::vector<SparseVec> compat_rows;
  Vector compat_rhs;
  /// [L_p,L_q] - L([p,q]) and [R_p,R_q] with R = L - ad, pairs p < q.
  std::vector<Poly> quadratic;

  std::size_t var(std::size_t i, std::size_t k, std::size_t j) const { return (i * dim + k) * dim + j; }
  /// Both linear blocks, relations first.
  std::vector<SparseVec> all_linear_rows() const;
  Vector all_linear_rhs() const;
};

PolySystem build_system(const LieAlgebra& g);

/// Affine substitution x_v = particular_v + sum_f directions_f[v] t_f; the
/// result is a polynomial in the parameters t_f.
struct Parametrization {
  std::vector<std::size_t> free;       // ascending free variables
  SparseVec particular;                // zero on free variables
  std::vector<SparseVec> directions;   // directions[f] is 1 at free[f], 0 at other free variables
};
Poly substitute(const Poly& p, const Parametrization& param);
std::vector<Poly> substitute(const std::vector<Poly>& ps, const Parametrization& param);

/// Value of a polynomial at a point.
Scalar evaluate(const Poly& p, const Vector& x);

}  // namespace novikov
