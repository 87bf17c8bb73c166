#include "pgc/serialize.hpp"

#include <sstream>

namespace pgc {

nlohmann::json to_json(const Matrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
  return rows;
}

nlohmann::json to_json(std::span<const Scalar> v) {
  auto out = nlohmann::json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

nlohmann::json to_json(const Polynomial& m) { return to_json(std::span<const Scalar>(m.coeffs())); }

Matrix matrix_from_json(const PrimeField& field, const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("matrix JSON must be an array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InvalidArgument("matrix row must be an array");
    rows.push_back(row.get<std::vector<std::int64_t>>());
  }
  return Matrix::from_rows(field, rows);
}

Polynomial polynomial_from_json(const PrimeField& field, const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial JSON must be a coefficient array");
  return Polynomial::from_integers(field, j.get<std::vector<std::int64_t>>());
}

Vector parse_vector(const PrimeField& field, const std::string& text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch == '[' || ch == ']' || ch == ',') {
      cleaned.push_back(' ');
    } else {
      cleaned.push_back(ch);
    }
  }
  std::istringstream is(cleaned);
  Vector out;
  std::string token;
  while (is >> token) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("not an integer: '" + token + "'");
    }
    if (used != token.size()) throw InvalidArgument("not an integer: '" + token + "'");
    out.push_back(field.reduce(value));
  }
  return out;
}

}  // namespace pgc
