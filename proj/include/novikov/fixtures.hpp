#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "novikov/lie.hpp"
#include "novikov/product.hpp"

namespace novikov {

/// One bracket or product entry, 1-based: mu(e_i, e_j) has coefficient
/// `value` on e_k.
struct Entry {
  std::size_t i, j, k;
  Scalar value;
};

/// Antisymmetric tensor with [e_i, e_j] given for the listed pairs.
StructureTensor bracket_tensor(std::size_t dim, const std::vector<Entry>& entries);
/// Product tensor with exactly the listed entries.
StructureTensor product_tensor(std::size_t dim, const std::vector<Entry>& entries);

namespace fixtures {

LieAlgebra abelian(std::size_t n);
/// [x1,x2] = x2.
LieAlgebra r2();
/// [e1,e2] = e3.
LieAlgebra n3();
/// [e1,e2] = e2, [e1,e3] = e2 + e3.
LieAlgebra r3();
/// [e1,e2] = e2, [e1,e3] = lambda e3.
LieAlgebra r3_lambda(const Scalar& lambda);
/// [e1,e2] = e3, [e1,e3] = -2e1, [e2,e3] = 2e2.
LieAlgebra sl2();
/// Basis (A,B,C,X,Y): [X,Y] = A, [X,A] = B, [Y,A] = C.
LieAlgebra ex35();
/// Free 4-step nilpotent algebra on two generators, 8-dim.
LieAlgebra free_n2_c4();
/// Free 3-step nilpotent algebra on three generators, 14-dim.
LieAlgebra free_n3_c3();
/// Standard filiform algebra: [e1,e_i] = e_(i+1) for 2 <= i < n.
LieAlgebra filiform(std::size_t n);
/// [e1,e_j] = e_j for j >= 2.
LieAlgebra in_lie(std::size_t n);

/// A∘X = -B/2, X∘A = B/2, Y∘A = C, Y∘X = -A on ex35().
AlgebraProduct ex35_product();
/// Novikov product on free_n3_c3().
AlgebraProduct free_n3_c3_product();
/// e1e1 = 2e1, e1e_j = e_j, e_je_j = e1: a left-symmetric product on in_lie(n).
AlgebraProduct in_lsa(std::size_t n);
/// e1e_j = e_j, other products zero: a Novikov product on in_lie(n).
AlgebraProduct in_novikov(std::size_t n);

}  // namespace fixtures

/// Named Lie algebra fixture. Parameters follow a colon: "abelian:4",
/// "r3-lambda:-1/2", "filiform:6", "In:3". Throws UnknownFixture.
LieAlgebra fixture(const std::string& name);
/// Named product fixture: "ex35", "free-n3-c3", "In:n", "In-novikov:n",
/// "half-bracket:<lie fixture>".
AlgebraProduct product_fixture(const std::string& name);
/// Lie algebra a named product lives on.
LieAlgebra product_fixture_lie(const std::string& name);

/// Every fixture the acceptance suite sweeps, parameters included.
std::vector<std::string> fixture_corpus();
std::vector<std::string> product_fixture_corpus();

}  // namespace novikov
