#pragma once

// Minkowski functional of the timelike Hilbert metric in chart coordinates,
// the logarithmic change of variables and the two constant timelike norms
// it produces.

#include <cstddef>
#include <vector>

#include "tlh/sphere.hpp"

namespace tlh {

/// Q1: x > 0, y > 0. Q2: x < 0, y > 0. The past boundary is the quadrant Q3.
enum class Quadrant { Q1, Q2 };
/// Norm type carried by a region in Log coordinates.
enum class RegionKind { TypeQ1, TypeQ2 };
enum class ConeClass { FuturePointing, PastPointing, Null, Spacelike };

const char* to_string(Quadrant q);
const char* to_string(RegionKind k);
const char* to_string(ConeClass c);

inline RegionKind kind_of(Quadrant q) {
  return q == Quadrant::Q1 ? RegionKind::TypeQ1 : RegionKind::TypeQ2;
}

/// Relative zero band for null directions.
inline constexpr double kNullTol = 1e-12;

struct ChartTangent {
  Vec2 base;
  Vec2 vector;
};

struct LogTangent {
  Vec2 base;
  Vec2 vector;
};

/// Throws BaseOutsideQuadrant unless base is strictly inside q.
void require_base(const Vec2& base, Quadrant q);

ConeClass cone_classify(const ChartTangent& t, Quadrant q);

/// p(x, v) from the case formulas; 0 on null and spacelike vectors.
double minkowski_functional(const ChartTangent& t, Quadrant q);

/// Q1: Log x = (log x, log y). Q2: Log x = (-log(-x), log y), whose
/// differential is v -> (v1 / (-x), v2 / y).
LogTangent to_log_coords(const ChartTangent& t, Quadrant q);
/// Chart vector at base with the given Log-coordinate vector.
Vec2 from_log_vector(const Vec2& base, const Vec2& log_vector, Quadrant q);
/// Chart point with the given Log coordinates.
Vec2 from_log_point(const Vec2& log_point, Quadrant q);

ConeClass normed_cone_classify(const Vec2& v, RegionKind kind);

/// The constant norm in Log coordinates; 0 outside the closed light cones.
double normed_functional(const Vec2& v, RegionKind kind);

/// Future cone generators in Log coordinates (the past cone is the negative).
std::array<Vec2, 2> future_generators(RegionKind kind);

enum class Branch { Past, Future };
const char* to_string(Branch b);

struct IndicatrixPoint {
  Vec2 v;
  Branch branch;
};

/// Default half-width of the parameter range on the unbounded branches.
inline constexpr double kIndicatrixExtent = 6.0;

/// `count` points of {p~ = 1} on the past branch followed by their negatives
/// on the future branch. The parameter s runs over [-extent, extent] evenly,
/// s = 0 being the corner.
std::vector<IndicatrixPoint> indicatrix_sample(RegionKind kind, std::size_t count,
                                               double extent = kIndicatrixExtent);

}  // namespace tlh
