#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pgc {

using Scalar = std::uint32_t;

/// Raised when an input violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The prime field GF(p). Scalars are plain integers kept in [0, p); the field
/// object carries the modulus and does the reductions.
///
/// p is checked for primality by trial division at construction and must be
/// below 2^16 so that products fit comfortably in 64-bit accumulators even
/// when summed over a few thousand terms.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Scalar reduce(std::int64_t a) const noexcept {
    auto r = a % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar reduce_u(std::uint64_t a) const noexcept { return static_cast<Scalar>(a % p_); }

  Scalar add(Scalar a, Scalar b) const noexcept {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const noexcept;

  /// Multiplicative inverse; throws InvalidArgument("not invertible") for 0.
  Scalar inv(Scalar a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Free-function form of PrimeField::inv.
inline Scalar gf_inverse(Scalar a, const PrimeField& field) { return field.inv(a); }

}  // namespace pgc
