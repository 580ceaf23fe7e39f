#pragma once

/* JSON forms.
 *
 * Polynomial: array of terms in canonical order,
 *   [{"coeff": "3", "vars": [["z", [1, 0], 2], ["y", [], 1]]}, ...]
 * with coefficients as decimal strings and one [family, indices, exponent]
 * triple per variable.
 *
 * Paired coefficient map:
 *   {"basis": "p" | "m", "n": 3, "m": 3,
 *    "terms": [[[[1, 0], [1, 0], [1, 0]], "1"], ...]}
 */

#include <json.hpp>

#include "gpoly/equivalence.hpp"
#include "gpoly/polyring.hpp"

namespace gpoly {

nlohmann::json polynomial_to_json(const SparsePolynomial& poly);
SparsePolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json paired_map_to_json(const PairedCoefficientMap& map);
PairedCoefficientMap paired_map_from_json(const nlohmann::json& j);

}  // namespace gpoly
