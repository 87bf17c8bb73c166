#include "pgc/subspace.hpp"

namespace pgc {

Subspace::Subspace(Matrix basis, std::vector<std::size_t> pivots)
    : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::span(const Matrix& generators) {
  std::vector<std::size_t> pivots;
  Matrix basis = rref(generators, &pivots);
  return Subspace(std::move(basis), std::move(pivots));
}

Subspace Subspace::span(PrimeField field, std::size_t ambient_dim, const std::vector<Vector>& generators) {
  return span(Matrix::from_row_vectors(field, ambient_dim, generators));
}

Subspace Subspace::zero(PrimeField field, std::size_t ambient_dim) { return span(Matrix(field, 0, ambient_dim)); }

Subspace Subspace::full(PrimeField field, std::size_t ambient_dim) {
  return span(Matrix::identity(field, ambient_dim));
}

void Subspace::check_ambient(std::size_t d) const {
  if (d != ambient_dim()) {
    throw InvalidArgument("ambient dimension mismatch: " + std::to_string(d) + " vs " + std::to_string(ambient_dim()));
  }
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  check_ambient(v.size());
  const auto& f = field();
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar factor = r[pivots_[i]];
    if (factor == 0) continue;
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = f.sub(r[k], f.mul(factor, basis_(i, k)));
  }
  return r;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  auto r = reduce(v);
  for (auto x : r) {
    if (x != 0) return false;
  }
  return true;
}

bool Subspace::is_contained_in(const Subspace& other) const {
  other.check_ambient(ambient_dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!other.contains(basis_.row(i))) return false;
  }
  return true;
}

Vector Subspace::quotient_coordinates(std::span<const Scalar> v) const {
  auto r = reduce(v);
  Vector out;
  out.reserve(ambient_dim() - dim());
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < r.size(); ++c) {
    if (next_pivot < pivots_.size() && pivots_[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    out.push_back(r[c]);
  }
  return out;
}

Subspace Subspace::operator+(const Subspace& o) const {
  check_ambient(o.ambient_dim());
  Matrix stacked(field(), dim() + o.dim(), ambient_dim());
  stacked.place(basis_, 0, 0);
  stacked.place(o.basis_, dim(), 0);
  return span(stacked);
}

Subspace Subspace::intersection(const Subspace& o) const {
  check_ambient(o.ambient_dim());
  // (x, y) with x S + y T = 0 gives x S in S cap T.
  Matrix stacked(field(), dim() + o.dim(), ambient_dim());
  stacked.place(basis_, 0, 0);
  stacked.place(o.basis_, dim(), 0);
  const auto kernel = rank_and_kernel(stacked).kernel;
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < kernel.dim(); ++i) {
    auto row = kernel.basis().row(i);
    gens.push_back(vec_mul(row.subspan(0, dim()), basis_));
  }
  return span(field(), ambient_dim(), gens);
}

RankAndKernel rank_and_kernel(const Matrix& m) {
  // Left kernel of M is the right kernel of M^T; solve via RREF of M^T.
  const auto& f = m.field();
  const Matrix t = transpose(m);
  std::vector<std::size_t> pivots;
  const Matrix r = rref(t, &pivots);
  const std::size_t n = m.rows();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
    gens.push_back(std::move(v));
  }
  return {pivots.size(), Subspace::span(f, n, gens)};
}

}  // namespace pgc
