#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "novikov/scalar.hpp"

namespace novikov {

/// Dense rational matrix, row-major.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Matrix with a single 1 at (row, col).
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t row, std::size_t col);
  /// Full Jordan block of size n for eigenvalue 0: ones on the superdiagonal.
  static Matrix jordan_block(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& entries() const { return data_; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;
  Scalar trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(const Scalar& s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);

/// Ring commutator ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& a, std::size_t k);
bool is_nilpotent(const Matrix& a);
/// Block diagonal diag(a, b).
Matrix block_diagonal(const Matrix& a, const Matrix& b);

std::string to_string(const Matrix& m);

}  // namespace novikov
