#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgc/field.hpp"
#include "pgc/polynomial.hpp"

namespace pgc {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over GF(p).
///
/// Vectors are rows and maps act on the right: the image of a row vector v
/// under M is v * M. Zero-sized shapes (0 x k, k x 0) are legal.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  static Matrix identity(PrimeField field, std::size_t n);
  /// Rows of arbitrary integers, reduced mod p. All rows must have equal length.
  static Matrix from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix from_row_vectors(PrimeField field, std::size_t cols, const std::vector<Vector>& rows);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t value) { entries_[r * cols_ + c] = field_.reduce(value); }

  std::span<const Scalar> row(std::size_t r) const noexcept { return {entries_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) noexcept { return {entries_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const { return Vector(row(r).begin(), row(r).end()); }

  std::span<const Scalar> entries() const noexcept { return entries_; }
  std::span<Scalar> entries() noexcept { return entries_; }

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;

  /// Block copy of `block` with its top-left corner at (r, c).
  void place(const Matrix& block, std::size_t r, std::size_t c);
  Matrix submatrix(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(Scalar s) const;

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }
  /// Row-major lexicographic order on entries; shapes compared first.
  bool operator<(const Matrix& o) const;

  std::string to_string() const;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Exact product; throws InvalidArgument on shape or field mismatch.
Matrix matrix_product(const Matrix& a, const Matrix& b);

/// Row vector times matrix.
Vector vec_mul(std::span<const Scalar> v, const Matrix& m);

/// Inverse by Gauss-Jordan; std::nullopt when singular.
std::optional<Matrix> matrix_inverse(const Matrix& m);

Matrix transpose(const Matrix& m);
Matrix power(const Matrix& m, std::uint64_t e);
Scalar determinant(const Matrix& m);
std::size_t rank(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// nonzero row. Zero rows are dropped from the result.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Flattened row-major entries as a vector of length rows*cols.
Vector flatten(const Matrix& m);

// --- companion matrices and polynomial evaluation -------------------------

/// Companion matrix of monic m of degree n in row-vector form:
/// ones on the superdiagonal, last row (-m_0, ..., -m_{n-1}).
Matrix companion_matrix(const Polynomial& m);

/// m(M) by Horner's rule.
Matrix evaluate_at(const Polynomial& m, const Matrix& a);

/// det(xI - M) via reduction to upper Hessenberg form.
Polynomial characteristic_polynomial(const Matrix& m);

}  // namespace pgc
