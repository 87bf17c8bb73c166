#pragma once

#include <cstdint>

#include "pgc/exterior.hpp"
#include "pgc/matrix.hpp"
#include "pgc/polynomial.hpp"
#include "pgc/report.hpp"

namespace pgc {

/// n(n-1)/2.
constexpr std::size_t choose2(std::size_t n) noexcept { return n * (n - (n > 0 ? 1 : 0)) / 2; }

/// The linear map f : V -> W = Lambda^2 V with blockwise matrix
///
///     [ b  c ]
///     [ A  0 ]
///
/// in the ExtBasis coordinates, where V has basis v0..vn and U = <v1..vn>.
/// Row i of full() is v_i f.
class FMatrix {
 public:
  /// Assembles the block matrix without checking any hypothesis. Used for
  /// deliberately non-compliant maps in negative tests; prefer build_f_matrix.
  static FMatrix assemble(PrimeField field, Vector b, Vector c, Matrix a);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t dim_v() const noexcept { return n_ + 1; }
  std::size_t dim_w() const noexcept { return basis_.size(); }
  const Vector& b() const noexcept { return b_; }
  const Vector& c() const noexcept { return c_; }
  const Matrix& a() const noexcept { return a_; }
  const Matrix& full() const noexcept { return full_; }
  const ExtBasis& basis() const noexcept { return basis_; }

 private:
  FMatrix(PrimeField field, std::size_t n, Vector b, Vector c, Matrix a, Matrix full);

  PrimeField field_;
  std::size_t n_;
  Vector b_;
  Vector c_;
  Matrix a_;
  Matrix full_;
  ExtBasis basis_;
};

/// Builds f with A = companion_matrix(m). Requires n >= 3, b and c nonzero of
/// lengths n and n(n-1)/2, and m monic primitive of degree n.
FMatrix build_f_matrix(const PrimeField& field, std::size_t n, Vector b, Vector c, const Polynomial& m);

/// (1, 0, ..., 0) of the given length.
Vector unit_vector(std::size_t length, std::size_t position = 0);

/// Default construction: b = e_1, c = e_1 and the smallest primitive polynomial.
FMatrix build_default_f(const PrimeField& field, std::size_t n);

/// Facts about the companion matrix A of a primitive m: its eigenvalues are
/// the Frobenius conjugates of x mod m, it has order p^n - 1, {0} u <A> is a
/// field, F^n is cyclic, and its centralizer is F[A].
Report check_companion_properties(const Matrix& a, const Polynomial& m);

/// Facts about f: injectivity, U f = v0 ^ V = v0 ^ U, the space
/// {x : x ^ V <= V f} equals <v0>, and U = {x : x f in v0 ^ V}.
Report check_f_properties(const FMatrix& f);

}  // namespace pgc
