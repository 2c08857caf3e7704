#include "conelab/linalg.hpp"

#include <string>

namespace conelab {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_dim(rows[r], cols, "matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_cols(std::span<const Vector> cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require_dim(cols[c], rows, "matrix column");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_flat(std::size_t rows, std::size_t cols, Vector data) {
  if (data.size() != rows * cols) throw InputError("flat matrix data has wrong length");
  Matrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(data);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product: inner dimensions differ");
  Matrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) add_product(m(i, j), a(i, k), b(k, j));
    }
  return m;
}

Vector operator*(const Matrix& a, const Vector& x) {
  require_dim(x, a.cols(), "matrix-vector product");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) add_product(y[i], a(i, j), x[j]);
  return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("matrix sum: shapes differ");
  Matrix m = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) += b(i, j);
  return m;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix m = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) *= s;
  return m;
}

Rational dot(const Vector& a, const Vector& b) {
  require_dim(b, a.size(), "dot product");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) add_product(s, a[i], b[i]);
  return s;
}

Vector operator+(const Vector& a, const Vector& b) {
  require_dim(b, a.size(), "vector sum");
  Vector r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_dim(b, a.size(), "vector difference");
  Vector r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& a) {
  Vector r = a;
  for (auto& x : r) x *= s;
  return r;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

Matrix outer(const Vector& p, const Vector& q) {
  Matrix m(p.size(), q.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) m(i, j) = p[i] * q[j];
  return m;
}

Rational frobenius(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InputError("frobenius pairing: shapes differ");
  return dot(a.flat(), b.flat());
}

EchelonForm reduced_row_echelon(Matrix a) {
  EchelonForm out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < a.rows() && a(pivot, c).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(lead_row, j));
    const Rational inv = Rational(1) / a(lead_row, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(lead_row, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || a(r, c).is_zero()) continue;
      const Rational factor = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(lead_row, j).is_zero()) a(r, j) -= factor * a(lead_row, j);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const Matrix& a) { return reduced_row_echelon(a).pivots.size(); }

std::size_t rank(std::span<const Vector> vectors, std::size_t dim) {
  return rank(Matrix::from_rows(vectors, dim));
}

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows())
    throw InputError("solve_linear: right-hand side has dim " + std::to_string(b.size()) +
                     ", expected " + std::to_string(a.rows()));
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const EchelonForm e = reduced_row_echelon(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

std::vector<Vector> kernel_basis(const Matrix& a) {
  const EchelonForm e = reduced_row_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(primitive_direction(v));
  }
  return basis;
}

Vector primitive(const Vector& v) {
  mpz_class lcm_den = 1;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.denominator().get_mpz_t());
  }
  mpz_class g = 0;
  std::vector<mpz_class> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].numerator() * (lcm_den / v[i].denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) return v;
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g, 1);
  return out;
}

Vector primitive_direction(const Vector& v) {
  Vector p = primitive(v);
  for (const auto& x : p) {
    if (x.is_zero()) continue;
    if (x.sign() < 0)
      for (auto& y : p) y = -y;
    break;
  }
  return p;
}

std::strong_ordering lex_compare(const Vector& a, const Vector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = a[i] <=> b[i];
    if (c != 0) return c;
  }
  return a.size() <=> b.size();
}

void require_dim(const Vector& v, std::size_t dim, const char* what) {
  if (v.size() != dim)
    throw InputError(std::string(what) + ": expected dim " + std::to_string(dim) + ", got " +
                     std::to_string(v.size()));
}

}  // namespace conelab
