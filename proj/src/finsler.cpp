#include "tlh/finsler.hpp"

#include <algorithm>
#include <cmath>

namespace tlh {

namespace {

// Sign pattern of two cone coordinates: both negative is past, both positive
// future, one of them zero null.
ConeClass classify_coordinates(double a, double b, double scale) {
  const bool a0 = std::abs(a) <= kNullTol * scale;
  const bool b0 = std::abs(b) <= kNullTol * scale;
  if (a0 || b0) return ConeClass::Null;
  if (a < 0.0 && b < 0.0) return ConeClass::PastPointing;
  if (a > 0.0 && b > 0.0) return ConeClass::FuturePointing;
  return ConeClass::Spacelike;
}

// Coordinates in which the light cone of each norm is the quadrant pair.
Vec2 cone_coordinates(const Vec2& v, RegionKind kind) {
  return kind == RegionKind::TypeQ1 ? v : Vec2(v[0] + v[1], v[1]);
}

void require_nonzero(const Vec2& v) {
  if (v[0] == 0.0 && v[1] == 0.0) throw GeometryError(Errc::ZeroVector, "zero tangent vector");
}

}  // namespace

const char* to_string(Quadrant q) { return q == Quadrant::Q1 ? "q1" : "q2"; }
const char* to_string(RegionKind k) { return k == RegionKind::TypeQ1 ? "q1" : "q2"; }
const char* to_string(Branch b) { return b == Branch::Past ? "past" : "future"; }

const char* to_string(ConeClass c) {
  switch (c) {
    case ConeClass::FuturePointing: return "future";
    case ConeClass::PastPointing: return "past";
    case ConeClass::Null: return "null";
    case ConeClass::Spacelike: return "spacelike";
  }
  return "?";
}

void require_base(const Vec2& base, Quadrant q) {
  const bool inside = q == Quadrant::Q1 ? (base[0] > 0.0 && base[1] > 0.0)
                                        : (base[0] < 0.0 && base[1] > 0.0);
  if (!inside || !base.allFinite()) {
    throw GeometryError(Errc::BaseOutsideQuadrant,
                        std::string("base is not inside quadrant ") + to_string(q));
  }
}

LogTangent to_log_coords(const ChartTangent& t, Quadrant q) {
  require_base(t.base, q);
  const double x = t.base[0];
  const double y = t.base[1];
  if (q == Quadrant::Q1) {
    return {Vec2(std::log(x), std::log(y)), Vec2(t.vector[0] / x, t.vector[1] / y)};
  }
  return {Vec2(-std::log(-x), std::log(y)), Vec2(t.vector[0] / (-x), t.vector[1] / y)};
}

Vec2 from_log_vector(const Vec2& base, const Vec2& log_vector, Quadrant q) {
  require_base(base, q);
  const double sx = q == Quadrant::Q1 ? base[0] : -base[0];
  return Vec2(log_vector[0] * sx, log_vector[1] * base[1]);
}

Vec2 from_log_point(const Vec2& log_point, Quadrant q) {
  if (q == Quadrant::Q1) return Vec2(std::exp(log_point[0]), std::exp(log_point[1]));
  return Vec2(-std::exp(-log_point[0]), std::exp(log_point[1]));
}

ConeClass cone_classify(const ChartTangent& t, Quadrant q) {
  const LogTangent lt = to_log_coords(t, q);
  require_nonzero(t.vector);
  return normed_cone_classify(lt.vector, kind_of(q));
}

ConeClass normed_cone_classify(const Vec2& v, RegionKind kind) {
  require_nonzero(v);
  const Vec2 c = cone_coordinates(v, kind);
  return classify_coordinates(c[0], c[1], v.cwiseAbs().maxCoeff());
}

double minkowski_functional(const ChartTangent& t, Quadrant q) {
  const ConeClass cls = cone_classify(t, q);
  if (cls == ConeClass::Null || cls == ConeClass::Spacelike) return 0.0;
  const Vec2 v = cls == ConeClass::PastPointing ? t.vector : Vec2(-t.vector);
  const double x = t.base[0];
  const double y = t.base[1];

  if (q == Quadrant::Q1) {
    // The ray enters Q3 through the negative x axis when v2/v1 < y/x, which
    // for v1, v2 < 0 reads v2/y > v1/x; otherwise through the negative y axis.
    if (v[1] / y > v[0] / x) return -0.5 * v[1] / y;
    return -0.5 * v[0] / x;
  }
  // Q2: with v1 <= 0 the ray stays in Q3 once inside; otherwise it leaves
  // through the negative y axis.
  if (v[0] <= 0.0) return -0.5 * v[1] / y;
  return -0.5 * v[1] / y - 0.5 * v[0] / (-x);
}

double normed_functional(const Vec2& v, RegionKind kind) {
  const ConeClass cls = normed_cone_classify(v, kind);
  if (cls == ConeClass::Null || cls == ConeClass::Spacelike) return 0.0;
  const Vec2 w = cls == ConeClass::PastPointing ? v : Vec2(-v);
  if (kind == RegionKind::TypeQ1) return -0.5 * std::max(w[0], w[1]);
  if (w[0] <= 0.0) return -0.5 * w[1];
  return -0.5 * w[0] - 0.5 * w[1];
}

std::array<Vec2, 2> future_generators(RegionKind kind) {
  if (kind == RegionKind::TypeQ1) return {Vec2(1.0, 0.0), Vec2(0.0, 1.0)};
  return {Vec2(1.0, 0.0), Vec2(-1.0, 1.0)};
}

std::vector<IndicatrixPoint> indicatrix_sample(RegionKind kind, std::size_t count, double extent) {
  if (count < 2) throw GeometryError(Errc::InvalidArgument, "indicatrix needs count >= 2");
  if (!(extent > 0.0)) throw GeometryError(Errc::InvalidArgument, "indicatrix extent must be positive");
  std::vector<IndicatrixPoint> past;
  past.reserve(count);
  const double step = 2.0 * extent / static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) {
    const double s = k + 1 == count ? extent : -extent + step * static_cast<double>(k);
    Vec2 v;
    if (kind == RegionKind::TypeQ1) v = s <= 0.0 ? Vec2(-2.0, -2.0 + s) : Vec2(-2.0 - s, -2.0);
    else v = s <= 0.0 ? Vec2(s, -2.0) : Vec2(s, -2.0 - s);
    past.push_back({v, Branch::Past});
  }
  std::vector<IndicatrixPoint> out = past;
  for (const auto& pt : past) out.push_back({-pt.v, Branch::Future});
  return out;
}

}  // namespace tlh
