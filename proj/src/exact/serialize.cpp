#include "fzzt/exact/serialize.hpp"

#include <stdexcept>

namespace fzzt {

nlohmann::json to_json(const Rational& r) { return r.str(); }

nlohmann::json to_json(const RatPoly& p) {
    auto arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

nlohmann::json to_json(const RealPoly& p) {
    auto arr = nlohmann::json::array();
    for (double c : p.coeffs()) arr.push_back(c);
    return arr;
}

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("rational_from_json: expected \"p/q\" string or integer");
}

RatPoly ratpoly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("ratpoly_from_json: expected array");
    std::vector<Rational> c;
    c.reserve(j.size());
    for (const auto& v : j) c.push_back(rational_from_json(v));
    return RatPoly(std::move(c));
}

}  // namespace fzzt
