#include "novikov/scalar.hpp"

#include <cctype>

#include "novikov/error.hpp"

namespace novikov {

Scalar make_scalar(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw InputError("malformed rational '" + std::string(text) + "'");
  if ((num.size() > 1 && num.front() == '0') || (den.size() > 1 && den.front() == '0'))
    throw InputError("non-canonical rational '" + std::string(text) + "': leading zeros");

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  if (negative) q = -q;
  const std::string canonical = to_string(q);
  if (canonical != text)
    throw InputError("non-canonical rational '" + std::string(text) + "'; write it as '" + canonical + "'");
  return q;
}

std::string to_string(const Scalar& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Scalar(0));
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector size mismatch");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector size mismatch");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v);
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (y.size() != x.size()) throw InputError("vector size mismatch");
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] += a * x[i];
}

}  // namespace novikov
