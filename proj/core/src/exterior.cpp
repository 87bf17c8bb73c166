#include "pgc/exterior.hpp"

namespace pgc {

ExtBasis::ExtBasis(std::size_t dim_v) : dim_v_(dim_v) {
  pairs_.reserve(dim_v * (dim_v > 0 ? dim_v - 1 : 0) / 2);
  for (std::size_t j = 0; j < dim_v; ++j) {
    for (std::size_t k = j + 1; k < dim_v; ++k) pairs_.emplace_back(j, k);
  }
}

std::size_t ExtBasis::index(std::size_t j, std::size_t k) const {
  if (j >= k) throw InvalidArgument("pair index needs j < k, got (" + std::to_string(j) + "," + std::to_string(k) + ")");
  if (k >= dim_v_) throw InvalidArgument("pair index out of range");
  // Pairs starting before j contribute (dim_v-1) + (dim_v-2) + ... + (dim_v-j).
  return j * (2 * dim_v_ - j - 1) / 2 + (k - j - 1);
}

std::string ExtBasis::label(std::size_t position) const {
  const auto [j, k] = pair(position);
  return "v" + std::to_string(j) + "^v" + std::to_string(k);
}

Vector wedge(const PrimeField& field, std::span<const Scalar> u, std::span<const Scalar> v, const ExtBasis& basis) {
  if (u.size() != basis.dim_v() || v.size() != basis.dim_v()) {
    throw InvalidArgument("wedge: vector length does not match dim V = " + std::to_string(basis.dim_v()));
  }
  Vector out(basis.size());
  for (std::size_t pos = 0; pos < basis.size(); ++pos) {
    const auto [j, k] = basis.pair(pos);
    out[pos] = field.sub(field.mul(u[j], v[k]), field.mul(u[k], v[j]));
  }
  return out;
}

Matrix induced_exterior_map(const Matrix& g, const ExtBasis& basis) {
  if (!g.is_square() || g.rows() != basis.dim_v()) {
    throw InvalidArgument("induced map needs a square matrix of size dim V");
  }
  Matrix out(g.field(), basis.size(), basis.size());
  for (std::size_t pos = 0; pos < basis.size(); ++pos) {
    const auto [j, k] = basis.pair(pos);
    const auto w = wedge(g.field(), g.row(j), g.row(k), basis);
    std::copy(w.begin(), w.end(), out.row(pos).begin());
  }
  return out;
}

}  // namespace pgc
