#pragma once

#include <json.hpp>

#include <string>

namespace fzzt::cli {

using Json = nlohmann::ordered_json;

/// 17 significant digits for every float, "p/q" strings pass through as
/// strings. Arrays of scalars stay on one line.
std::string dump(const Json& j);

std::string format_double(double x);

}  // namespace fzzt::cli
