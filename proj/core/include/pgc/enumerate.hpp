#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pgc/matrix.hpp"

namespace pgc {

/// Raised when an exhaustive enumeration would exceed its size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Half-open range [begin, end) of integer matrix encodings.
struct EncodingRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::uint64_t size() const noexcept { return end - begin; }
};

inline constexpr std::uint64_t kDefaultGlGuard = std::uint64_t{1} << 30;

struct EnumerationOptions {
  std::uint64_t guard = kDefaultGlGuard;
  bool force = false;
};

/// p^(rows*cols); throws InvalidArgument if it does not fit in 63 bits.
std::uint64_t matrix_space_size(const PrimeField& field, std::size_t rows, std::size_t cols);

/// |GL(k, p)| = prod_{i<k} (p^k - p^i).
std::uint64_t gl_order(std::size_t k, const PrimeField& field);

/// Base-p integer whose digits are the entries in row-major order, the
/// (0,0) entry being the most significant digit.
std::uint64_t encode_matrix(const Matrix& m);
Matrix decode_matrix(const PrimeField& field, std::size_t rows, std::size_t cols, std::uint64_t code);

/// Splits [0, total) into `parts` contiguous ranges of near-equal size.
std::vector<EncodingRange> partition_range(std::uint64_t total, std::size_t parts);

/// Throws GuardExceeded when `space` is above the guard and force is off.
void check_guard(std::uint64_t space, const EnumerationOptions& options, const std::string& what);

/// Worker count for parallel searches: PGC_WORKERS if set, otherwise the
/// hardware concurrency (at least 1).
unsigned default_worker_count();

/// Visits every rows x cols matrix whose encoding lies in `range`, in
/// ascending encoding order. The matrix is updated in place between calls.
template <class Fn>
void for_each_matrix(const PrimeField& field, std::size_t rows, std::size_t cols, EncodingRange range, Fn&& fn) {
  if (range.begin >= range.end) return;
  Matrix m = decode_matrix(field, rows, cols, range.begin);
  auto entries = m.entries();
  const Scalar top = field.p() - 1;
  for (std::uint64_t code = range.begin;;) {
    fn(static_cast<const Matrix&>(m), code);
    if (++code == range.end) break;
    for (std::size_t i = entries.size(); i-- > 0;) {
      if (entries[i] != top) {
        ++entries[i];
        break;
      }
      entries[i] = 0;
    }
  }
}

/// Invertible k x k matrices with encodings in `range`, ascending.
template <class Fn>
void for_each_invertible(const PrimeField& field, std::size_t k, EncodingRange range, Fn&& fn) {
  for_each_matrix(field, k, k, range, [&](const Matrix& m, std::uint64_t code) {
    if (is_invertible(m)) fn(m, code);
  });
}

/// Every element of GL(k, p) exactly once, ascending by encoding.
std::vector<Matrix> enumerate_gl(std::size_t k, const PrimeField& field, const EnumerationOptions& options = {});

/// The part of GL(k, p) whose encodings lie in `range`.
std::vector<Matrix> enumerate_gl(std::size_t k, const PrimeField& field, EncodingRange range);

}  // namespace pgc
