#pragma once

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "pgc/matrix.hpp"
#include "pgc/polynomial.hpp"

namespace pgc {

// JSON forms used in every report: matrices are arrays of row arrays,
// polynomials are coefficient lists with the constant term first.

nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(std::span<const Scalar> v);
nlohmann::json to_json(const Polynomial& m);

Matrix matrix_from_json(const PrimeField& field, const nlohmann::json& j);
Polynomial polynomial_from_json(const PrimeField& field, const nlohmann::json& j);

/// Accepts "[1,0,1]", "1,0,1" or "1 0 1"; entries reduced mod p.
Vector parse_vector(const PrimeField& field, const std::string& text);

}  // namespace pgc
