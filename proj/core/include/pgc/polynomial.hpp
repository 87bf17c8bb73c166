#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pgc/field.hpp"

namespace pgc {

/// Dense polynomial over GF(p), coefficients lowest degree first.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial(PrimeField field, std::vector<Scalar> coeffs);
  explicit Polynomial(PrimeField field) : field_(field) {}

  /// Accepts arbitrary integers and reduces them mod p.
  static Polynomial from_integers(PrimeField field, const std::vector<std::int64_t>& coeffs);
  static Polynomial monomial(PrimeField field, std::size_t degree, Scalar coeff = 1);
  static Polynomial constant(PrimeField field, Scalar c) { return monomial(field, 0, c); }

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Scalar coefficient(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Scalar leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  Scalar evaluate(Scalar x) const noexcept;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(Scalar s) const;

  /// Quotient and remainder; throws on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial operator%(const Polynomial& divisor) const { return divmod(divisor).second; }

  Polynomial monic() const;

  bool operator==(const Polynomial& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }

  /// Human-readable form, e.g. "x^3 + 2x + 1".
  std::string to_string() const;

 private:
  void normalize();

  PrimeField field_;
  std::vector<Scalar> coeffs_;
};

Polynomial gcd(Polynomial a, Polynomial b);

/// base^exponent mod modulus by repeated squaring.
Polynomial powmod(const Polynomial& base, std::uint64_t exponent, const Polynomial& modulus);

/// True iff the monic polynomial m (degree >= 1) has no monic factor of
/// degree 1..deg(m)-1. Uses the gcd(x^(p^i) - x, m) criterion for i <= deg/2.
bool poly_is_irreducible(const Polynomial& m);

/// Multiplicative order of the residue of x in GF(p)[x]/(m), for irreducible m
/// with m(0) != 0. Computed from the factorization of p^n - 1.
std::uint64_t order_of_x(const Polynomial& m);

/// True iff x has multiplicative order p^n - 1 modulo the irreducible m.
/// Throws InvalidArgument("not irreducible") on reducible input.
bool poly_is_primitive(const Polynomial& m);

/// Smallest monic primitive polynomial of degree n, ordering candidates by the
/// integer sum m_i p^i over the non-leading coefficients.
Polynomial find_primitive_polynomial(const PrimeField& field, std::size_t n);

/// p^e with overflow detection (throws InvalidArgument past 2^63).
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

/// Distinct prime factors by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace pgc
