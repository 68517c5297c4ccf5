#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace novikov {

/// Exact rational in lowest terms with positive denominator. gmpxx keeps the
/// results of arithmetic canonical; values built from a raw numerator and
/// denominator go through make_scalar.
using Scalar = mpq_class;

/// Dense coordinate vector.
using Vector = std::vector<Scalar>;

Scalar make_scalar(long num, long den = 1);

/// Parses "p", "-p" or "p/q". Non-canonical spellings ("2/4", "3/1", "+1",
/// "0/5", "-0") are rejected with a hint naming the canonical form.
Scalar parse_scalar(std::string_view text);

/// Canonical text: bare integer when the denominator is 1, "p/q" otherwise.
std::string to_string(const Scalar& x);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
void axpy(Vector& y, const Scalar& a, const Vector& x);  // y += a*x

}  // namespace novikov
