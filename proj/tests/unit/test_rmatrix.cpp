#include <doctest.h>

#include "generators.hpp"
#include "novikov/error.hpp"
#include "novikov/fixtures.hpp"
#include "novikov/rmatrix.hpp"
#include "oracles.hpp"

using namespace novikov;
using testing_support::Rng;

namespace {

/// E_ij: T(e_j) = e_i, 1-based.
Matrix e(std::size_t i, std::size_t j) { return Matrix::unit(3, 3, i - 1, j - 1); }

bool both_checks(const RMatrix& r) { return check_cybe(r) && check_novbed(r); }

void agrees_with_oracle(const RMatrix& r) {
  const oracle::T3 b = oracle::dense(r.g.structure());
  const oracle::Mat t = oracle::dense(r.t);
  CHECK(bool(check_cybe(r)) == oracle::cybe(b, t));
  CHECK(bool(check_novbed(r)) == oracle::novikov_condition(b, t));
}

}  // namespace

TEST_CASE("sl2 r-matrices and the three outcomes") {
  const LieAlgebra sl2 = fixture("sl2");
  const RMatrix zero(sl2, Matrix(3, 3)), e12(sl2, e(1, 2)), e33(sl2, e(3, 3));
  for (const RMatrix* r : {&zero, &e12, &e33}) {
    CHECK(both_checks(*r));
    agrees_with_oracle(*r);
    const AlgebraProduct p = induced_product(*r);
    CHECK(is_novikov(p));
    CHECK(is_compatible(p, deformed_lie(*r)));
    CHECK(oracle::novikov(oracle::dense(p.tensor())));
  }
  CHECK(deformed_lie(zero).is_abelian());

  const Profile p12 = profile(deformed_lie(e12));
  CHECK(p12.nilpotency_class == 2u);
  CHECK(p12 == profile(fixture("n3")));

  const LieAlgebra g33 = deformed_lie(e33);
  CHECK_FALSE(is_nilpotent(g33));
  CHECK(is_solvable(g33));
  CHECK(is_unimodular(g33));
  CHECK(profile(g33) == profile(fixture("r3-lambda:-1")));
  /// The stable lower central term of r_{3,-1} is [g,g], which is 2-dim.
  CHECK(lower_central_series(g33).back().dim() == 2);
}

TEST_CASE("sl2 family samples") {
  const LieAlgebra sl2 = fixture("sl2");
  const std::pair<Scalar, Scalar> samples[] = {
      {1, 2}, {0, 0}, {-1, 1}, {Scalar(1, 2), Scalar(-1, 3)}, {-4, 2}};
  for (const auto& [a, b] : samples) {
    CAPTURE(to_string(a));
    CAPTURE(to_string(b));
    const RMatrix r(sl2, sl2_family(a, b));
    CHECK(both_checks(r));
    agrees_with_oracle(r);
    const AlgebraProduct p = induced_product(r);
    CHECK(is_novikov(p));
    const LieAlgebra gt = deformed_lie(r);
    if (a + b * b == 0) {
      CHECK(nilpotency_class(gt) == 2u);
    } else {
      CHECK_FALSE(lower_central_series(gt).back().is_zero());
    }
  }
  /// The family matrix at (1,2) spelled out.
  const Matrix m = sl2_family(1, 2);
  CHECK(m == Matrix(3, 3, {1, 1, 4, 1, 1, 4, 2, 2, 8}));
}

TEST_CASE("r-matrix examples on small algebras") {
  const LieAlgebra r2 = fixture("r2");
  Matrix t(2, 2);
  t(0, 0) = 1;
  const RMatrix r(r2, t);
  CHECK(both_checks(r));
  CHECK(deformed_lie(r).structure() == r2.structure());
  const AlgebraProduct p = induced_product(r);
  StructureTensor expect(2);
  expect.set(0, 1, 1, 1);
  CHECK(p.tensor() == expect);

  const RMatrix b = basis_rmatrix(r2, 0, 0);
  CHECK(both_checks(b));
  CHECK(deformed_lie(b).structure() == r2.structure());

  const LieAlgebra n3 = fixture("n3");
  const RMatrix n = basis_rmatrix(n3, 0, 2);
  CHECK(both_checks(n));
  CHECK(deformed_lie(n).is_abelian());
  CHECK_THROWS_AS(basis_rmatrix(n3, 2, 0), HypothesisFailed);

  /// E13 on sl2 is decided by the brute-force scan.
  agrees_with_oracle(RMatrix(fixture("sl2"), e(1, 3)));
  CHECK_THROWS_AS(induced_product(RMatrix(fixture("sl2"), Matrix::identity(3))), PreconditionFailed);
}

TEST_CASE("class bounds on random basis r-matrices") {
  Rng rng(41);
  std::vector<LieAlgebra> pool;
  for (const char* name : {"n3", "r2", "r3", "ex35", "free-n2-c4", "filiform:5", "filiform:7", "In:3", "r3-lambda:2"})
    pool.push_back(fixture(name));
  for (int k = 0; k < 4; ++k) pool.push_back(testing_support::random_two_step_nilpotent(rng));
  int found = 0, tries = 0;
  while (found < 20 && tries < 2000) {
    ++tries;
    const LieAlgebra& g = pool[static_cast<std::size_t>(rng.range(0, static_cast<int>(pool.size()) - 1))];
    const std::size_t l = static_cast<std::size_t>(rng.range(0, static_cast<int>(g.dim()) - 1));
    const std::size_t m = static_cast<std::size_t>(rng.range(0, static_cast<int>(g.dim()) - 1));
    std::optional<RMatrix> r;
    try {
      r.emplace(basis_rmatrix(g, l, m));
    } catch (const HypothesisFailed&) {
      continue;
    }
    ++found;
    CHECK(both_checks(*r));
    agrees_with_oracle(*r);
    const ClassBounds cb = class_bounds_report(*r);
    CHECK(cb.nilpotent_bound_holds);
    CHECK(cb.solvable_bound_holds);
    if (cb.nil_class_g) {
      REQUIRE(cb.nil_class_gT.has_value());
      CHECK(*cb.nil_class_gT <= *cb.nil_class_g);
    }
    if (cb.solv_class_g) {
      REQUIRE(cb.solv_class_gT.has_value());
      CHECK(*cb.solv_class_gT <= *cb.solv_class_g);
    }
    const AlgebraProduct p = induced_product(*r);
    CHECK(is_novikov(p));
    CHECK(is_compatible(p, deformed_lie(*r)));
  }
  CHECK(found == 20);
}
