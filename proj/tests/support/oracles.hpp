#pragma once

/// Dense reference implementations written straight from the definitions.
/// They share nothing with the library beyond reading structure constants.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "novikov/matrix.hpp"
#include "novikov/tensor.hpp"

namespace oracle {

using Q = mpq_class;
using Vec = std::vector<Q>;
using Mat = std::vector<Vec>;
/// t[i][j][k]: coefficient of e_k in e_i * e_j.
using T3 = std::vector<std::vector<Vec>>;

T3 dense(const novikov::StructureTensor& t);
T3 zero_tensor(std::size_t n);
Mat dense(const novikov::Matrix& m);
Mat identity(std::size_t n);

Vec mul(const T3& t, const Vec& x, const Vec& y);
Vec basis(std::size_t n, std::size_t i);
Vec add(Vec a, const Vec& b, const Q& s = 1);
bool is_zero(const Vec& v);

Mat matmul(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Vec apply(const Mat& a, const Vec& v);
/// Matrix of y -> t(x, y) and of y -> t(y, x).
Mat left(const T3& t, const Vec& x);
Mat right(const T3& t, const Vec& x);
bool is_zero(const Mat& m);
bool nilpotent(const Mat& m);

/// Rank by plain fraction-based elimination on a copy.
std::size_t rank(std::vector<Vec> rows);
/// Is v in the span of the rows?
bool in_span(const std::vector<Vec>& rows, const Vec& v);

bool antisymmetric(const T3& b);
bool jacobi(const T3& b);
/// dims of g, [g,g], [g,[g,g]], ... until it stops shrinking.
std::vector<std::size_t> lower_central_dims(const T3& b);
std::vector<std::size_t> derived_dims(const T3& b);

bool left_symmetric(const T3& p);
bool novikov(const T3& p);
bool right_commute(const T3& p);
/// x*y - y*x = [x,y].
bool compatible(const T3& p, const T3& b);
/// L([x,y]) + ad([x,y]) - [ad x, L y] - [L x, ad y] = 0.
bool linear_relation(const T3& p, const T3& b);
bool commutator_identities(const T3& p);
bool all_right_nilpotent_on_basis(const T3& p);

/// [Tx,Ty] = T([Tx,y] + [x,Ty]).
bool cybe(const T3& b, const Mat& t);
/// [x, T[y,Tz]] = [y, T[x,Tz]].
bool novikov_condition(const T3& b, const Mat& t);

/// Smallest subspace containing v and closed under the operators; returns
/// true when some word of length `len` does not kill v.
bool word_survives(const std::vector<Mat>& ops, const Vec& v, std::size_t len);

}  // namespace oracle
