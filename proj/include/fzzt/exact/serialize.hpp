#pragma once

#include "fzzt/exact/poly.hpp"

#include <json.hpp>

namespace fzzt {

// Rationals travel as "p/q" strings; a polynomial is an array of those,
// index = power of z.
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const RatPoly& p);
nlohmann::json to_json(const RealPoly& p);

Rational rational_from_json(const nlohmann::json& j);
RatPoly ratpoly_from_json(const nlohmann::json& j);

}  // namespace fzzt
