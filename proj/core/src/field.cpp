#include "pgc/field.hpp"

namespace pgc {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 16)) {
    throw InvalidArgument("prime modulus " + std::to_string(p) + " exceeds the supported range (< 65536)");
  }
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const noexcept {
  Scalar result = 1 % p_;
  Scalar base = a % p_;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Scalar PrimeField::inv(Scalar a) const {
  a %= p_;
  if (a == 0) throw InvalidArgument("not invertible: 0 has no inverse in GF(" + std::to_string(p_) + ")");
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0);
}

}  // namespace pgc
