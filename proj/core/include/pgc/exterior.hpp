#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pgc/matrix.hpp"

namespace pgc {

/// Ordered basis v_j ^ v_k (j < k) of the exterior square of a space of
/// dimension dim_v. The order is v0^v1, ..., v0^vn followed by the pairs
/// (i, j), 1 <= i < j <= n, lexicographically.
class ExtBasis {
 public:
  explicit ExtBasis(std::size_t dim_v);

  std::size_t dim_v() const noexcept { return dim_v_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const noexcept { return pairs_; }
  std::pair<std::size_t, std::size_t> pair(std::size_t position) const { return pairs_.at(position); }

  /// Position of v_j ^ v_k. Requires j < k < dim_v.
  std::size_t index(std::size_t j, std::size_t k) const;

  /// "v0^v1" style label for reports.
  std::string label(std::size_t position) const;

 private:
  std::size_t dim_v_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/// Free-function form of ExtBasis::index.
inline std::size_t pair_index(std::size_t j, std::size_t k, const ExtBasis& basis) { return basis.index(j, k); }

/// Coordinates of u ^ v: entry (j,k) is u_j v_k - u_k v_j.
Vector wedge(const PrimeField& field, std::span<const Scalar> u, std::span<const Scalar> v, const ExtBasis& basis);

/// The matrix of g acting on the exterior square: row (j,k) holds
/// (v_j g) ^ (v_k g). Works for singular g as well.
Matrix induced_exterior_map(const Matrix& g, const ExtBasis& basis);

}  // namespace pgc
