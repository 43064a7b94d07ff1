#pragma once

#include <string>
#include <string_view>

#include "hypernil/constructions.hpp"
#include "hypernil/dsl.hpp"

namespace hypernil {

/// {"J": [3 matrices of rational strings], "brackets": [{"i", "j", "coeffs":
/// {"k": "p/q"}}], "dim": n, "name": ..., "notes": ...}, 1-based indices,
/// keys sorted, two-space indentation. "notes" is omitted when empty.
std::string serialize_json(const AlgebraSpec& spec);

/// Reads the schema above into a bracket-form AlgebraSpec. Rationals may be
/// strings or integers. Throws ParseError; syntax errors carry line and
/// column, schema errors name the offending JSON path.
AlgebraSpec parse_json(std::string_view text);

/// {"fiber_dim": r, "terms": [{"i", "j", "coeffs": {"k": "p/q"}}]} with base
/// indices i, j and fiber index k (1-based, k relative to the fiber).
MuForm parse_mu_json(std::string_view text, std::size_t base_dim);
std::string serialize_mu_json(const MuForm& mu);

/// {"blocks": k, "images": [{"generator": i, "matrix": [[...]]}]}; omitted
/// generators act by zero.
Representation parse_rho_json(std::string_view text, std::size_t base_dim);
std::string serialize_rho_json(const Representation& rho);

}  // namespace hypernil
