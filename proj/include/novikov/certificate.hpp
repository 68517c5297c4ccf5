#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "novikov/config.hpp"
#include "novikov/lie.hpp"
#include "novikov/poly.hpp"
#include "novikov/product.hpp"

namespace novikov {

/// Outcome of decide_novikov with a self-contained witness.
struct Certificate {
  enum class Verdict { Exists, NotExists, Undetermined };
  enum class Witness { None, LinearCombination, ConstantResidual };

  Verdict verdict = Verdict::Undetermined;
  std::uint64_t algebra_hash = 0;
  std::size_t dim = 0;
  std::string method;

  /// Exists: a Novikov product compatible with the bracket.
  AlgebraProduct product;

  Witness witness = Witness::None;
  /// LinearCombination: y with y^T A = 0 and y^T b != 0 over the relation
  /// rows followed by the compatibility rows.
  SparseVec linear_combination;
  /// ConstantResidual: the full solution space of the linear block, and a
  /// combination of quadratic equations that becomes `constant` on it.
  Parametrization param;
  SparseVec combination;
  Scalar constant;

  /// Undetermined: residual count and row operations spent.
  std::size_t residuals = 0;
  std::size_t steps = 0;
};

std::string to_string(Certificate::Verdict v);

/// Constructors first, then the linear block, the substituted residuals and
/// at most `effort` elimination row operations. Deterministic.
Certificate decide_novikov(const LieAlgebra& g, std::size_t effort = kDefaultEffort);

/// Re-checks a certificate from scratch; Undetermined never verifies.
bool verify_certificate(const LieAlgebra& g, const Certificate& c);
/// Same, reusing a system built for g.
bool verify_certificate(const LieAlgebra& g, const PolySystem& system, const Certificate& c);

/// Product whose left multiplications are read off an L-entry vector.
AlgebraProduct product_from_entries(const PolySystem& system, const Vector& x);

}  // namespace novikov
