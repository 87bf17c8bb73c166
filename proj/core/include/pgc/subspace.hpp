#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pgc/matrix.hpp"

namespace pgc {

/// A subspace of GF(p)^d stored by its reduced-row-echelon basis.
/// Two subspaces are equal iff their RREF bases are identical.
class Subspace {
 public:
  /// The span of the rows of `generators`.
  static Subspace span(const Matrix& generators);
  static Subspace span(PrimeField field, std::size_t ambient_dim, const std::vector<Vector>& generators);
  static Subspace zero(PrimeField field, std::size_t ambient_dim);
  static Subspace full(PrimeField field, std::size_t ambient_dim);

  const PrimeField& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v reduced against the basis; zero iff v lies in the subspace.
  Vector reduce(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;
  /// this <= other.
  bool is_contained_in(const Subspace& other) const;

  /// Coordinates of v in W / this, read off the non-pivot columns of the
  /// reduced vector. Length ambient_dim - dim.
  Vector quotient_coordinates(std::span<const Scalar> v) const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersection(const Subspace& o) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  explicit Subspace(Matrix basis, std::vector<std::size_t> pivots);
  void check_ambient(std::size_t d) const;

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

struct RankAndKernel {
  std::size_t rank;
  /// Left kernel {v : v M = 0}.
  Subspace kernel;
};

RankAndKernel rank_and_kernel(const Matrix& m);

/// Row space of m.
inline Subspace row_space(const Matrix& m) { return Subspace::span(m); }

}  // namespace pgc
