#include <doctest.h>

#include "novikov/error.hpp"
#include "novikov/linalg.hpp"
#include "oracles.hpp"
#include "rng.hpp"

using namespace novikov;
using testing_support::Rng;

namespace {

Matrix rows(std::initializer_list<std::initializer_list<long>> r) {
  std::vector<Vector> v;
  for (auto& row : r) {
    Vector x;
    for (long e : row) x.push_back(Scalar(e));
    v.push_back(x);
  }
  return Matrix::from_rows(v, v.empty() ? 0 : v[0].size());
}

Vector vec(std::initializer_list<long> r) {
  Vector v;
  for (long e : r) v.push_back(Scalar(e));
  return v;
}

Vector times(const Matrix& a, const Vector& x) {
  Vector out(a.rows(), Scalar(0));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * x[c];
  return out;
}

}  // namespace

TEST_CASE("scalars are canonical") {
  CHECK(parse_scalar("1/2") == Scalar(1, 2));
  CHECK(parse_scalar("-7") == Scalar(-7));
  CHECK(parse_scalar("0") == 0);
  for (const char* bad : {"2/4", "3/1", "+1", "-0", "0/5", "01", "1/0", "1/-2", "x", ""}) CHECK_THROWS_AS(parse_scalar(bad), InputError);
  try {
    parse_scalar("2/4");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("'1/2'") != std::string::npos);
  }
  CHECK(to_string(make_scalar(-3, 6)) == "-1/2");
  CHECK(to_string(make_scalar(4, 2)) == "2");
}

TEST_CASE("solve_linear on the identity") {
  const LinearSolution s = solve_linear(Matrix::identity(3), vec({1, 2, 3}));
  REQUIRE(s.consistent);
  CHECK(s.particular == vec({1, 2, 3}));
  CHECK(s.nullspace.is_zero());
}

TEST_CASE("solve_linear reports a witness for a contradiction") {
  const Matrix a = rows({{1, 1}, {1, 1}});
  const LinearSolution s = solve_linear(a, vec({1, 2}));
  REQUIRE_FALSE(s.consistent);
  REQUIRE(s.witness.size() == 2);
  /// y^T A = 0, y^T b != 0, and y is proportional to (1,-1).
  CHECK(s.witness[0] + s.witness[1] == 0);
  CHECK(s.witness[0] * 1 + s.witness[1] * 2 != 0);
  CHECK(s.witness[0] != 0);
}

TEST_CASE("solve_linear on a single row") {
  const LinearSolution s = solve_linear(rows({{2, 4}}), vec({6}));
  REQUIRE(s.consistent);
  CHECK(s.particular == vec({3, 0}));
  REQUIRE(s.nullspace.dim() == 1);
  CHECK(s.nullspace.contains(vec({-2, 1})));
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(Matrix(2, 2)).is_full());
  CHECK(nullspace(Matrix::identity(2)).is_zero());
  const Subspace k = nullspace(rows({{1, 2}, {2, 4}}));
  REQUIRE(k.dim() == 1);
  CHECK(k.contains(vec({-2, 1})));
}

TEST_CASE("random consistent systems round-trip") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = static_cast<std::size_t>(rng.range(1, 6)), c = static_cast<std::size_t>(rng.range(1, 6));
    Matrix a = rng.matrix(r, c);
    if (rng.coin() && r > 1)
      for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j) * 2;
    Vector x0(c);
    for (auto& x : x0) x = rng.small();
    const Vector b = times(a, x0);
    const LinearSolution s = solve_linear(a, b);
    REQUIRE(s.consistent);
    CHECK(times(a, s.particular) == b);
    Vector y = s.particular;
    for (const auto& v : s.nullspace.basis()) {
      CHECK(is_zero(times(a, v)));
      axpy(y, rng.small(), v);
    }
    CHECK(times(a, y) == b);
    /// Rank against the independent elimination.
    CHECK(rank(a) == oracle::rank(oracle::dense(a)));
    CHECK(s.nullspace.dim() == c - rank(a));
  }
}

TEST_CASE("random inconsistent systems carry verifying witnesses") {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t c = static_cast<std::size_t>(rng.range(1, 5));
    Matrix a = rng.matrix(3, c);
    for (std::size_t j = 0; j < c; ++j) a(2, j) = a(0, j) - a(1, j);
    Vector b{rng.small(), rng.small(), Scalar(0)};
    b[2] = b[0] - b[1] + 1;
    const LinearSolution s = solve_linear(a, b);
    REQUIRE_FALSE(s.consistent);
    for (std::size_t j = 0; j < c; ++j) {
      Scalar t(0);
      for (std::size_t r = 0; r < 3; ++r) t += s.witness[r] * a(r, j);
      CHECK(t == 0);
    }
    Scalar yb(0);
    for (std::size_t r = 0; r < 3; ++r) yb += s.witness[r] * b[r];
    CHECK(yb != 0);
  }
}

TEST_CASE("subspace canonical form is idempotent") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vector> vs;
    for (int k = 0; k < 3; ++k) vs.push_back(rng.matrix(1, 4).row(0));
    const Subspace s = Subspace::span(4, vs);
    CHECK(Subspace::span(4, s.basis()) == s);
    CHECK(s.dim() == oracle::rank(oracle::dense(Matrix::from_rows(vs, 4))));
  }
}

TEST_CASE("nilpotent_regular_basis") {
  CHECK(nilpotent_regular_basis(Matrix::jordan_block(3)) == Matrix::identity(3));
  const Matrix c = rows({{1, 1}, {0, 1}});
  const Matrix n = c * Matrix::jordan_block(2) * inverse(c);
  const Matrix p = nilpotent_regular_basis(n);
  CHECK(p * n * inverse(p) == Matrix::jordan_block(2));
  CHECK_THROWS_AS(nilpotent_regular_basis(Matrix(2, 2)), NotRegularNilpotent);
  CHECK_THROWS_AS(nilpotent_regular_basis(Matrix::identity(2)), NotRegularNilpotent);

  Rng rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t k = static_cast<std::size_t>(rng.range(1, 6));
    const Matrix q = rng.invertible(k);
    const Matrix m = q * Matrix::jordan_block(k) * inverse(q);
    const Matrix pm = nilpotent_regular_basis(m);
    CHECK(pm * m * inverse(pm) == Matrix::jordan_block(k));
  }
}

TEST_CASE("word_image_space examples") {
  const Subspace a = word_image_space({Matrix::jordan_block(2)}, Subspace::full(2), 1);
  CHECK(a == Subspace::span(2, {vec({1, 0})}));
  CHECK(word_image_space({Matrix(3, 3)}, Subspace::full(3), 1).is_zero());
  const Subspace c = word_image_space({Matrix::jordan_block(3)}, Subspace::full(3), 2);
  CHECK(c == Subspace::span(3, {vec({1, 0, 0})}));
}
