#pragma once

// JSON and text formatting shared by the CLI and the verification suites.

#include <string>
#include <vector>

#include <json.hpp>

#include "tlh/sphere.hpp"

namespace tlh {

using Json = nlohmann::ordered_json;

/// "%.15g" rendering.
std::string fmt15(double x);

/// A number rounded to 15 significant digits; non-finite values become null.
Json num(double x);
Json num(const Vec2& v);
Json num(const Vec3& v);

/// Compact JSON text.
std::string dump(const Json& j);

/// Parses a real; accepts e, pi and a leading '-'. Throws InvalidArgument.
double parse_number(const std::string& text);
/// Comma-separated tuple of exactly n reals.
std::vector<double> parse_tuple(const std::string& text, std::size_t n);

}  // namespace tlh
