#include "pgc/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace pgc {

Polynomial::Polynomial(PrimeField field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= field_.p();
  normalize();
}

Polynomial Polynomial::from_integers(PrimeField field, const std::vector<std::int64_t>& coeffs) {
  std::vector<Scalar> reduced;
  reduced.reserve(coeffs.size());
  for (auto c : coeffs) reduced.push_back(field.reduce(c));
  return Polynomial(field, std::move(reduced));
}

Polynomial Polynomial::monomial(PrimeField field, std::size_t degree, Scalar coeff) {
  std::vector<Scalar> c(degree + 1, 0);
  c[degree] = coeff;
  return Polynomial(field, std::move(c));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Scalar Polynomial::evaluate(Scalar x) const noexcept {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Scalar> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.add(coefficient(i), o.coefficient(i));
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Scalar> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.sub(coefficient(i), o.coefficient(i));
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial(field_);
  std::vector<Scalar> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      r[i + j] = field_.add(r[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::scaled(Scalar s) const {
  std::vector<Scalar> r(coeffs_);
  for (auto& c : r) c = field_.mul(c, s);
  return Polynomial(field_, std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (!(field_ == divisor.field_)) throw InvalidArgument("polynomials over different fields");
  std::vector<Scalar> rem(coeffs_);
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() <= dd) return {Polynomial(field_), *this};
  std::vector<Scalar> quot(rem.size() - dd, 0);
  const Scalar lead_inv = field_.inv(divisor.leading());
  for (std::size_t k = rem.size(); k-- > dd;) {
    Scalar coef = field_.mul(rem[k], lead_inv);
    if (coef == 0) continue;
    quot[k - dd] = coef;
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[k - dd + j] = field_.sub(rem[k - dd + j], field_.mul(coef, divisor.coeffs_[j]));
    }
  }
  return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    Scalar c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'x';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial powmod(const Polynomial& base, std::uint64_t exponent, const Polynomial& modulus) {
  Polynomial result = Polynomial::constant(base.field(), 1) % modulus;
  Polynomial b = base % modulus;
  while (exponent > 0) {
    if (exponent & 1u) result = (result * b) % modulus;
    b = (b * b) % modulus;
    exponent >>= 1;
  }
  return result;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > (std::numeric_limits<std::uint64_t>::max() >> 1) / base) {
      throw InvalidArgument("integer power " + std::to_string(base) + "^" + std::to_string(exp) + " overflows");
    }
    r *= base;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

void require_monic(const Polynomial& m) {
  if (m.degree() < 1) throw InvalidArgument("polynomial must have degree >= 1");
  if (!m.is_monic()) throw InvalidArgument("polynomial must be monic: " + m.to_string());
}

}  // namespace

bool poly_is_irreducible(const Polynomial& m) {
  require_monic(m);
  const auto& field = m.field();
  const auto n = static_cast<std::size_t>(m.degree());
  if (n == 1) return true;
  const Polynomial x = Polynomial::monomial(field, 1);
  Polynomial frob = x;  // x^(p^i) mod m
  for (std::size_t i = 1; i <= n / 2; ++i) {
    frob = powmod(frob, field.p(), m);
    if (!gcd(m, frob - x).is_one()) return false;
  }
  return true;
}

std::uint64_t order_of_x(const Polynomial& m) {
  require_monic(m);
  if (m.coefficient(0) == 0) throw InvalidArgument("x is not a unit modulo " + m.to_string());
  const auto& field = m.field();
  const std::uint64_t group = checked_pow(field.p(), static_cast<std::uint64_t>(m.degree())) - 1;
  const Polynomial x = Polynomial::monomial(field, 1);
  if (!powmod(x, group, m).is_one()) throw InvalidArgument("not irreducible: " + m.to_string());
  std::uint64_t order = group;
  for (auto q : prime_factors(group)) {
    while (order % q == 0 && powmod(x, order / q, m).is_one()) order /= q;
  }
  return order;
}

bool poly_is_primitive(const Polynomial& m) {
  if (!poly_is_irreducible(m)) throw InvalidArgument("not irreducible: " + m.to_string());
  // Over GF(2) the polynomial x is irreducible but x is not a unit modulo it.
  if (m.coefficient(0) == 0) return false;
  const std::uint64_t group = checked_pow(m.field().p(), static_cast<std::uint64_t>(m.degree())) - 1;
  return order_of_x(m) == group;
}

Polynomial find_primitive_polynomial(const PrimeField& field, std::size_t n) {
  if (n < 1) throw InvalidArgument("degree must be >= 1");
  const std::uint64_t p = field.p();
  const std::uint64_t count = checked_pow(p, n);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<Scalar> coeffs(n + 1, 0);
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < n; ++i) {
      coeffs[i] = static_cast<Scalar>(rest % p);
      rest /= p;
    }
    coeffs[n] = 1;
    Polynomial candidate(field, std::move(coeffs));
    if (candidate.coefficient(0) == 0) continue;
    if (poly_is_irreducible(candidate) && poly_is_primitive(candidate)) return candidate;
  }
  throw std::logic_error("no primitive polynomial found; field arithmetic is broken");
}

}  // namespace pgc
