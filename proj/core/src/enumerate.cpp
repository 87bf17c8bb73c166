#include "pgc/enumerate.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace pgc {

std::uint64_t matrix_space_size(const PrimeField& field, std::size_t rows, std::size_t cols) {
  return checked_pow(field.p(), rows * cols);
}

std::uint64_t gl_order(std::size_t k, const PrimeField& field) {
  const std::uint64_t pk = checked_pow(field.p(), k);
  std::uint64_t order = 1;
  std::uint64_t pi = 1;
  for (std::size_t i = 0; i < k; ++i) {
    order *= pk - pi;
    pi *= field.p();
  }
  return order;
}

std::uint64_t encode_matrix(const Matrix& m) {
  (void)matrix_space_size(m.field(), m.rows(), m.cols());
  std::uint64_t code = 0;
  for (auto e : m.entries()) code = code * m.field().p() + e;
  return code;
}

Matrix decode_matrix(const PrimeField& field, std::size_t rows, std::size_t cols, std::uint64_t code) {
  const auto space = matrix_space_size(field, rows, cols);
  if (code >= space) throw InvalidArgument("matrix encoding out of range");
  Matrix m(field, rows, cols);
  auto entries = m.entries();
  for (std::size_t i = entries.size(); i-- > 0;) {
    entries[i] = static_cast<Scalar>(code % field.p());
    code /= field.p();
  }
  return m;
}

std::vector<EncodingRange> partition_range(std::uint64_t total, std::size_t parts) {
  if (parts == 0) parts = 1;
  std::vector<EncodingRange> out;
  out.reserve(parts);
  const std::uint64_t base = total / parts;
  const std::uint64_t extra = total % parts;
  std::uint64_t at = 0;
  for (std::size_t i = 0; i < parts; ++i) {
    const std::uint64_t len = base + (i < extra ? 1 : 0);
    out.push_back({at, at + len});
    at += len;
  }
  return out;
}

void check_guard(std::uint64_t space, const EnumerationOptions& options, const std::string& what) {
  if (space > options.guard && !options.force) {
    throw GuardExceeded(what + ": search space of " + std::to_string(space) + " candidates exceeds the guard of " +
                        std::to_string(options.guard) + "; use the structured search or pass --force");
  }
}

unsigned default_worker_count() {
  if (const char* env = std::getenv("PGC_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<Matrix> enumerate_gl(std::size_t k, const PrimeField& field, const EnumerationOptions& options) {
  const auto space = matrix_space_size(field, k, k);
  check_guard(space, options, "enumerate_gl");
  return enumerate_gl(k, field, EncodingRange{0, space});
}

std::vector<Matrix> enumerate_gl(std::size_t k, const PrimeField& field, EncodingRange range) {
  std::vector<Matrix> out;
  for_each_invertible(field, k, range, [&](const Matrix& m, std::uint64_t) { out.push_back(m); });
  return out;
}

}  // namespace pgc
