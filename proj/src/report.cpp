#include "tlh/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace tlh {

std::string fmt15(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

Json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(fmt15(x).c_str(), nullptr);
}

Json num(const Vec2& v) { return Json::array({num(v[0]), num(v[1])}); }
Json num(const Vec3& v) { return Json::array({num(v[0]), num(v[1]), num(v[2])}); }

std::string dump(const Json& j) { return j.dump(); }

double parse_number(const std::string& text) {
  std::string body = text;
  double sign = 1.0;
  if (!body.empty() && body[0] == '-') {
    sign = -1.0;
    body.erase(0, 1);
  }
  if (body == "e") return sign * std::exp(1.0);
  if (body == "pi") return sign * kPi;
  if (!body.empty() && body[0] != '+' && body[0] != '-') {
    char* end = nullptr;
    const double v = std::strtod(body.c_str(), &end);
    if (end && *end == '\0' && std::isfinite(v)) return sign * v;
  }
  throw GeometryError(Errc::InvalidArgument, "not a number: '" + text + "'");
}

std::vector<double> parse_tuple(const std::string& text, std::size_t n) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_number(text.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != n) {
    throw GeometryError(Errc::InvalidArgument, "expected " + std::to_string(n) +
                                                   " comma-separated numbers, got '" + text + "'");
  }
  return out;
}

}  // namespace tlh
