#pragma once

// Independent reference computations used to freeze expected values.
// Nothing here calls into the library's algorithms: polynomials and matrices
// are plain integer vectors and every routine is the textbook brute force.

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Poly = std::vector<std::int64_t>;  // constant term first
using Mat = std::vector<std::vector<std::int64_t>>;

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t inverse_by_scan(std::int64_t a, std::int64_t p) {
  for (std::int64_t b = 1; b < p; ++b) {
    if (mod(a * b, p) == 1) return b;
  }
  return 0;
}

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic-or-not b over GF(p).
inline Poly poly_rem(Poly a, const Poly& b, std::int64_t p) {
  for (auto& x : a) x = mod(x, p);
  trim(a);
  Poly d = b;
  for (auto& x : d) x = mod(x, p);
  trim(d);
  const std::int64_t inv = inverse_by_scan(d.back(), p);
  while (a.size() >= d.size()) {
    const std::int64_t coef = mod(a.back() * inv, p);
    const std::size_t shift = a.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) a[shift + i] = mod(a[shift + i] - coef * d[i], p);
    trim(a);
  }
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = mod(r[i + j] + a[i] * b[j], p);
  }
  trim(r);
  return r;
}

// Every monic polynomial of the given degree, ordered by sum c_i p^i.
inline std::vector<Poly> monic_polys(std::int64_t p, std::size_t degree) {
  std::vector<Poly> out;
  std::int64_t count = 1;
  for (std::size_t i = 0; i < degree; ++i) count *= p;
  for (std::int64_t code = 0; code < count; ++code) {
    Poly c(degree + 1, 0);
    std::int64_t rest = code;
    for (std::size_t i = 0; i < degree; ++i) {
      c[i] = rest % p;
      rest /= p;
    }
    c[degree] = 1;
    out.push_back(c);
  }
  return out;
}

// No monic factor of degree 1..deg-1, by trial division.
inline bool irreducible_by_trial_division(const Poly& m, std::int64_t p) {
  const std::size_t n = m.size() - 1;
  for (std::size_t d = 1; d < n; ++d) {
    for (const auto& g : monic_polys(p, d)) {
      if (poly_rem(m, g, p).empty()) return false;
    }
  }
  return true;
}

// Order of x modulo m by walking the powers; 0 if x is not a unit.
inline std::uint64_t order_of_x_by_iteration(const Poly& m, std::int64_t p) {
  Poly x = {0, 1};
  Poly acc = poly_rem(x, m, p);
  if (acc.empty()) return 0;
  std::uint64_t limit = 1;
  for (std::size_t i = 1; i < m.size(); ++i) limit *= static_cast<std::uint64_t>(p);
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (acc == Poly{1}) return k;
    acc = poly_rem(poly_mul(acc, x, p), m, p);
  }
  return 0;
}

inline bool primitive_by_iteration(const Poly& m, std::int64_t p) {
  std::uint64_t group = 1;
  for (std::size_t i = 1; i < m.size(); ++i) group *= static_cast<std::uint64_t>(p);
  return irreducible_by_trial_division(m, p) && order_of_x_by_iteration(m, p) == group - 1;
}

inline Mat mat_mul(const Mat& a, const Mat& b, std::int64_t p) {
  Mat r(a.size(), std::vector<std::int64_t>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] = mod(r[i][j] + a[i][k] * b[k][j], p);
    }
  }
  return r;
}

// det(xI - M) by cofactor expansion along the first row, entries in GF(p)[x].
inline Poly charpoly_by_cofactors(const Mat& m, std::int64_t p) {
  const std::size_t n = m.size();
  std::vector<std::vector<Poly>> e(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Poly entry = {mod(-m[i][j], p)};
      if (i == j) entry.push_back(1);
      trim(entry);
      e[i][j] = entry;
    }
  }
  std::function<Poly(const std::vector<std::size_t>&, std::size_t)> det = [&](const std::vector<std::size_t>& cols,
                                                                                std::size_t row) -> Poly {
    if (cols.empty()) return {1};
    Poly total;
    for (std::size_t t = 0; t < cols.size(); ++t) {
      std::vector<std::size_t> rest;
      for (std::size_t s = 0; s < cols.size(); ++s) {
        if (s != t) rest.push_back(cols[s]);
      }
      Poly term = poly_mul(e[row][cols[t]], det(rest, row + 1), p);
      if (t % 2 == 1) {
        for (auto& x : term) x = mod(-x, p);
      }
      total.resize(std::max(total.size(), term.size()), 0);
      for (std::size_t i = 0; i < term.size(); ++i) total[i] = mod(total[i] + term[i], p);
      trim(total);
    }
    return total;
  };
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = i;
  return det(cols, 0);
}

// Calls fn on every k x k matrix over GF(p).
inline void for_all_matrices(std::size_t rows, std::size_t cols, std::int64_t p, const std::function<void(const Mat&)>& fn) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < rows * cols; ++i) total *= static_cast<std::uint64_t>(p);
  Mat m(rows, std::vector<std::int64_t>(cols, 0));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (std::size_t r = rows; r-- > 0;) {
      for (std::size_t c = cols; c-- > 0;) {
        m[r][c] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(p));
        rest /= static_cast<std::uint64_t>(p);
      }
    }
    fn(m);
  }
}

// Determinant by cofactor expansion (small n only).
inline std::int64_t det_by_cofactors(const Mat& m, std::int64_t p) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return mod(m[0][0], p);
  std::int64_t total = 0;
  for (std::size_t t = 0; t < n; ++t) {
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != t) row.push_back(m[r][c]);
      }
      minor.push_back(row);
    }
    const std::int64_t term = m[0][t] * det_by_cofactors(minor, p);
    total = mod(total + (t % 2 ? -term : term), p);
  }
  return total;
}

// (v g) f == (v f) g-hat for every v in V, straight from the definition:
// f is given by its rows over the basis pairs (j<k) in lexicographic order,
// and g-hat acts on v_j ^ v_k as (v_j g) ^ (v_k g).
inline bool commutes_by_definition(const Mat& g, const Mat& f, std::int64_t p) {
  const std::size_t dim = g.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = j + 1; k < dim; ++k) pairs.emplace_back(j, k);
  }
  auto apply = [&](const std::vector<std::int64_t>& v, const Mat& m) {
    std::vector<std::int64_t> out(m[0].size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < out.size(); ++j) out[j] = mod(out[j] + v[i] * m[i][j], p);
    }
    return out;
  };
  auto wedge = [&](const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> w;
    for (auto [j, k] : pairs) w.push_back(mod(u[j] * v[k] - u[k] * v[j], p));
    return w;
  };
  bool ok = true;
  for_all_matrices(1, dim, p, [&](const Mat& vm) {
    if (!ok) return;
    const auto& v = vm[0];
    const auto lhs = apply(apply(v, g), f);
    const auto vf = apply(v, f);
    std::vector<std::int64_t> rhs(pairs.size(), 0);
    for (std::size_t w = 0; w < pairs.size(); ++w) {
      if (vf[w] == 0) continue;
      const auto term = wedge(g[pairs[w].first], g[pairs[w].second]);
      for (std::size_t s = 0; s < rhs.size(); ++s) rhs[s] = mod(rhs[s] + vf[w] * term[s], p);
    }
    ok = lhs == rhs;
  });
  return ok;
}

}  // namespace oracle
