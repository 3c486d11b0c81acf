#ifndef LIEDERIV_JSON_IO_HPP
#define LIEDERIV_JSON_IO_HPP

#include "liederiv/derivations.hpp"

#include <json.hpp>

namespace liederiv::io {

using json = nlohmann::json;

// Rationals are strings "p/q" (or "p"); matrices are row-major nested arrays of them.
// Roots are written as 1-based [i, j] pairs, matching the E[i,j] labels.

json to_json(const Rational& r);
json to_json(const Vector& v);
json to_json(const Matrix& m);

/// Accepts "p/q" strings or JSON integers. Throws UsageError otherwise.
Rational rational_from_json(const json& j);
Vector vector_from_json(const json& j);
Matrix matrix_from_json(const json& j);

/// {"dim": n, "basis": [labels], "sc": [[i, j, k, "p/q"], ...]} with 0-based i < j.
json algebra_to_json(const LieAlgebra& lie);
LieAlgebra algebra_from_json(const json& j);

/// Algebra dump extended with blocks, delta_prime, subspace bases and summary dims.
json parabolic_to_json(const ParabolicAlgebra& q);

/// {"dim": d, "matrix": [[...]]}
json derivation_to_json(const Matrix& d);
Matrix derivation_from_json(const json& j);

json decomposition_to_json(const DecompositionResult& r);
json report_to_json(const VerificationReport& r);
json case_to_json(const CaseReport& c);

} // namespace liederiv::io

#endif // LIEDERIV_JSON_IO_HPP
