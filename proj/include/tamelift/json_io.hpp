#pragma once

#include <string>

#include <json.hpp>

#include "tamelift/approx.hpp"
#include "tamelift/center.hpp"
#include "tamelift/gauge.hpp"
#include "tamelift/star_lift.hpp"

namespace tamelift {

/// nlohmann's default object type is an ordered std::map, so every dump has
/// sorted keys. Rationals travel as strings and no field is a float.
using Json = nlohmann::json;

Json to_json(const QPoly& f);
Json to_json(const FpPoly& f);
/// Accepts {"n_vars", "terms": [{"exp", "coeff"}]} or {"n_vars", "text"}.
QPoly poly_from_json(const Json& j);

Json to_json(const QEndo& phi);
/// Center maps carry their modulus as "p".
Json to_json(const Endo<ModInt>& phi);
QEndo endo_from_json(const Json& j);

/// Linear factors are written row by row: "linear"[i][j] = A(i, j), with the
/// image of variable j equal to sum_i v_i A(i, j).
Json to_json(const QTameWord& w);
QTameWord word_from_json(const Json& j);

Json to_json(const HbarWeyl& u);
Json to_json(const FpWeyl& u);
HbarWeyl hbar_weyl_from_json(const Json& j);

/// Adds "K" when the coefficient ring is truncated.
Json to_json(const HbarWeylAuto& psi);
Json to_json(const FpWeylAuto& psi);
HbarWeylAuto hbar_auto_from_json(const Json& j);

Json to_json(const HbarPoly& f);
/// Accepts HbarPoly JSON or DSL text in x/p variables plus "h" for hbar.
HbarPoly hbar_poly_from_json(const Json& j, std::size_t n_vars);
HbarPoly parse_hbar_poly(const std::string& text, std::size_t n_vars);
std::string to_string(const HbarPoly& f);

Json to_json(const NormalizeResult& r);
Json to_json(const ApproxResult& r);

/// Reads a whole file as JSON; InvalidInput on I/O or parse failure.
Json read_json_file(const std::string& path);

}  // namespace tamelift
