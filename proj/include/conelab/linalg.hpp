#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "conelab/rational.hpp"

namespace conelab {

using Vector = std::vector<Rational>;

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Every row must have length `cols`; `cols` disambiguates the empty case.
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);
  static Matrix from_cols(std::span<const Vector> cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  /// Row-major flattening, length rows*cols.
  const Vector& flat() const { return data_; }
  static Matrix from_flat(std::size_t rows, std::size_t cols, Vector data);

  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);

Rational dot(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& a);
bool is_zero(const Vector& v);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

/// p qᵀ.
Matrix outer(const Vector& p, const Vector& q);
/// Frobenius pairing Σ a_ij b_ij.
Rational frobenius(const Matrix& a, const Matrix& b);

/// Reduced row echelon form together with pivot column indices.
struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
EchelonForm reduced_row_echelon(Matrix a);

std::size_t rank(const Matrix& a);
/// Rank of a family of vectors of common length `dim`.
std::size_t rank(std::span<const Vector> vectors, std::size_t dim);

/// Exact x with A·x = b, or nullopt if inconsistent. Free variables are set to 0.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

/// Basis of {v : A·v = 0}; each vector integer-primitive with first nonzero
/// entry positive, count = cols − rank.
std::vector<Vector> kernel_basis(const Matrix& a);

/// Positive rescaling to integer entries with gcd 1. Zero stays zero.
Vector primitive(const Vector& v);
/// primitive(v) with additional sign flip so the first nonzero entry is positive.
Vector primitive_direction(const Vector& v);

/// Lexicographic comparison on entries (vectors of equal length).
std::strong_ordering lex_compare(const Vector& a, const Vector& b);

void require_dim(const Vector& v, std::size_t dim, const char* what);

}  // namespace conelab
