#include "pgc/matrix.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace pgc {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw InvalidArgument("matrices over different fields");
}

// In-place reduction of a rows x cols buffer to RREF. Returns pivot columns.
std::vector<std::size_t> eliminate(const PrimeField& f, Scalar* a, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(a + piv * cols, a + piv * cols + cols, a + r * cols);
    const Scalar inv = f.inv(a[r * cols + c]);
    for (std::size_t k = c; k < cols; ++k) a[r * cols + k] = f.mul(a[r * cols + k], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Scalar factor = a[i * cols + c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) {
        a[i * cols + k] = f.sub(a[i * cols + k], f.mul(factor, a[r * cols + k]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Forward elimination that only counts the rank; no allocation.
std::size_t echelon_rank(const PrimeField& f, Scalar* a, std::size_t rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(a + piv * cols, a + piv * cols + cols, a + r * cols);
    const Scalar inv = f.inv(a[r * cols + c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Scalar factor = f.mul(a[i * cols + c], inv);
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) a[i * cols + k] = f.sub(a[i * cols + k], f.mul(factor, a[r * cols + k]));
    }
    ++r;
  }
  return r;
}

}  // namespace

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % field.p();
  return m;
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_row_vectors(PrimeField field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("row vector length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c] % field.p();
  }
  return m;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Scalar s) { return s == 0; });
}

bool Matrix::is_identity() const noexcept {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
    }
  }
  return true;
}

void Matrix::place(const Matrix& block, std::size_t r, std::size_t c) {
  if (r + block.rows() > rows_ || c + block.cols() > cols_) throw InvalidArgument("block does not fit");
  for (std::size_t i = 0; i < block.rows(); ++i) {
    for (std::size_t j = 0; j < block.cols(); ++j) (*this)(r + i, c + j) = block(i, j);
  }
}

Matrix Matrix::submatrix(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const {
  if (r + rows > rows_ || c + cols > cols_) throw InvalidArgument("submatrix out of range");
  Matrix out(field_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(r + i, c + j);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("shape mismatch in matrix sum");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = field_.add(entries_[i], o.entries_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("shape mismatch in matrix difference");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = field_.sub(entries_[i], o.entries_[i]);
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const { return matrix_product(*this, o); }

Matrix Matrix::scaled(Scalar s) const {
  Matrix out(*this);
  for (auto& e : out.entries_) e = field_.mul(e, s);
  return out;
}

bool Matrix::operator<(const Matrix& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  return entries_ < o.entries_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

Matrix matrix_product(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw InvalidArgument("shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                          std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const auto& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] += x * b(k, j);
    }
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.reduce_u(acc[j]);
  }
  return out;
}

Vector vec_mul(std::span<const Scalar> v, const Matrix& m) {
  if (v.size() != m.rows()) throw InvalidArgument("vector length does not match matrix rows");
  std::vector<std::uint64_t> acc(m.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) acc[j] += static_cast<std::uint64_t>(v[k]) * m(k, j);
  }
  Vector out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) out[j] = m.field().reduce_u(acc[j]);
  return out;
}

std::optional<Matrix> matrix_inverse(const Matrix& m) {
  if (!m.is_square()) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const auto& f = m.field();
  // Augment [M | I] and reduce.
  Matrix aug(f, n, 2 * n);
  aug.place(m, 0, 0);
  aug.place(Matrix::identity(f, n), 0, n);
  auto pivots = eliminate(f, aug.entries().data(), n, 2 * n);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) return std::nullopt;
  return aug.submatrix(0, n, n, n);
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  }
  return out;
}

Matrix power(const Matrix& m, std::uint64_t e) {
  if (!m.is_square()) throw InvalidArgument("power of a non-square matrix");
  Matrix result = Matrix::identity(m.field(), m.rows());
  Matrix base = m;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw InvalidArgument("determinant of a non-square matrix");
  const auto& f = m.field();
  const std::size_t n = m.rows();
  std::vector<Scalar> a(m.entries().begin(), m.entries().end());
  Scalar det = 1 % f.p();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap_ranges(a.begin() + piv * n, a.begin() + piv * n + n, a.begin() + c * n);
      det = f.neg(det);
    }
    det = f.mul(det, a[c * n + c]);
    const Scalar inv = f.inv(a[c * n + c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      const Scalar factor = f.mul(a[i * n + c], inv);
      if (factor == 0) continue;
      for (std::size_t k = c; k < n; ++k) a[i * n + k] = f.sub(a[i * n + k], f.mul(factor, a[c * n + k]));
    }
  }
  return det;
}

std::size_t rank(const Matrix& m) {
  std::vector<Scalar> a(m.entries().begin(), m.entries().end());
  return echelon_rank(m.field(), a.data(), m.rows(), m.cols());
}

bool is_invertible(const Matrix& m) {
  if (!m.is_square()) return false;
  const std::size_t n = m.rows();
  if (n * n <= 64) {
    std::array<Scalar, 64> buf{};
    std::copy(m.entries().begin(), m.entries().end(), buf.begin());
    return echelon_rank(m.field(), buf.data(), n, n) == n;
  }
  return rank(m) == n;
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
  Matrix work = m;
  auto piv = eliminate(m.field(), work.entries().data(), m.rows(), m.cols());
  Matrix out = work.submatrix(0, 0, piv.size(), m.cols());
  if (pivots) *pivots = std::move(piv);
  return out;
}

Vector flatten(const Matrix& m) { return Vector(m.entries().begin(), m.entries().end()); }

Matrix companion_matrix(const Polynomial& m) {
  if (m.degree() < 1) throw InvalidArgument("companion matrix needs degree >= 1");
  if (!m.is_monic()) throw InvalidArgument("companion matrix needs a monic polynomial: " + m.to_string());
  const auto& f = m.field();
  const auto n = static_cast<std::size_t>(m.degree());
  Matrix c(f, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i, i + 1) = 1;
  for (std::size_t j = 0; j < n; ++j) c(n - 1, j) = f.neg(m.coefficient(j));
  return c;
}

Matrix evaluate_at(const Polynomial& m, const Matrix& a) {
  if (!a.is_square()) throw InvalidArgument("polynomial evaluation needs a square matrix");
  const auto& f = a.field();
  const auto id = Matrix::identity(f, a.rows());
  Matrix acc(f, a.rows(), a.cols());
  for (std::size_t k = m.coeffs().size(); k-- > 0;) acc = acc * a + id.scaled(m.coefficient(k));
  return acc;
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw InvalidArgument("characteristic polynomial needs a square matrix");
  const auto& f = m.field();
  const std::size_t n = m.rows();
  Matrix h = m;

  // Similarity transform to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t sub = col + 1;
    std::size_t piv = sub;
    while (piv < n && h(piv, col) == 0) ++piv;
    if (piv == n) continue;
    if (piv != sub) {
      for (std::size_t k = 0; k < n; ++k) std::swap(h(piv, k), h(sub, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(h(k, piv), h(k, sub));
    }
    const Scalar inv = f.inv(h(sub, col));
    for (std::size_t i = sub + 1; i < n; ++i) {
      const Scalar u = f.mul(h(i, col), inv);
      if (u == 0) continue;
      for (std::size_t k = 0; k < n; ++k) h(i, k) = f.sub(h(i, k), f.mul(u, h(sub, k)));
      for (std::size_t k = 0; k < n; ++k) h(k, sub) = f.add(h(k, sub), f.mul(u, h(k, i)));
    }
  }

  // chars[k] is the characteristic polynomial of the leading k x k block.
  std::vector<Polynomial> chars;
  chars.reserve(n + 1);
  chars.push_back(Polynomial::constant(f, 1));
  const Polynomial x = Polynomial::monomial(f, 1);
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial next = (x - Polynomial::constant(f, h(k - 1, k - 1))) * chars[k - 1];
    Scalar prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod = f.mul(prod, h(k - i, k - i - 1));
      const Scalar coef = f.mul(h(k - i - 1, k - 1), prod);
      next = next - chars[k - i - 1].scaled(coef);
    }
    chars.push_back(std::move(next));
  }
  return chars.back();
}

}  // namespace pgc
