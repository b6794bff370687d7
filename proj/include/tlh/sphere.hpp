#pragma once

// Primitives on the unit sphere S^2 in R^3: points, great circles, the
// sine cross ratio, the six central-projection charts and the multi-sign.

#include <array>
#include <string>

#include <Eigen/Core>

#include "tlh/error.hpp"

namespace tlh {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Zero band for coordinate signs and "on a coordinate plane" tests.
inline constexpr double kSignTol = 1e-12;
/// Distance from a circle plane below which a point counts as on the circle.
inline constexpr double kOnCircleTol = 1e-9;
/// |p x q| below which two points are treated as equal or antipodal.
inline constexpr double kPairTol = 1e-10;

/// A unit vector of R^3. Any nonzero vector is normalized on construction.
class SpherePoint {
 public:
  explicit SpherePoint(const Vec3& v);
  SpherePoint(double x1, double x2, double x3) : SpherePoint(Vec3(x1, x2, x3)) {}

  const Vec3& vec() const { return v_; }
  /// Zero-based coordinate access.
  double operator[](int i) const { return v_[i]; }

  SpherePoint antipode() const { return SpherePoint(-v_, Unchecked{}); }

  friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
    return a.v_ == b.v_;
  }

 private:
  struct Unchecked {};
  SpherePoint(const Vec3& unit, Unchecked) : v_(unit) {}

  Vec3 v_;
};

/// Arc length between two points, in [0, pi].
double spherical_distance(const SpherePoint& p, const SpherePoint& q);

/// sin d(p, q), computed as |p x q| which stays accurate near 0 and pi.
double sin_distance(const SpherePoint& p, const SpherePoint& q);

/// Great circle with unit normal n and orthonormal basis (e1, e2),
/// e1 x e2 = n. Points are parametrized as cos(t) e1 + sin(t) e2.
class GreatCircle {
 public:
  /// Builds a circle from a normal; e1 is chosen deterministically.
  static GreatCircle from_normal(const Vec3& normal);
  /// Circle with e1 = start and the given unit normal (start must be
  /// orthogonal to normal).
  static GreatCircle with_origin(const SpherePoint& start, const Vec3& normal);

  const Vec3& normal() const { return n_; }
  const Vec3& e1() const { return e1_; }
  const Vec3& e2() const { return e2_; }

  SpherePoint point_at(double angle) const;
  /// Angle of p in [0, 2 pi); p is assumed to lie on the circle.
  double angle_of(const SpherePoint& p) const;
  double angle_of(const Vec3& v) const;
  bool contains(const SpherePoint& p, double tol = kOnCircleTol) const;

 private:
  GreatCircle(const Vec3& n, const Vec3& e1, const Vec3& e2) : n_(n), e1_(e1), e2_(e2) {}

  Vec3 n_, e1_, e2_;
};

/// The circle through p and q with e1 = p, so q sits at an angle in (0, pi).
GreatCircle great_circle_through(const SpherePoint& p, const SpherePoint& q);

/// Sine cross ratio [p1, p2, p3, p4] of four points in that order on circle:
///   sin d(p2,p4) sin d(p3,p1) / (sin d(p3,p4) sin d(p2,p1)).
/// Returns +inf when only the denominator vanishes.
double spherical_cross_ratio(const SpherePoint& p1, const SpherePoint& p2,
                             const SpherePoint& p3, const SpherePoint& p4,
                             const GreatCircle& circle);

/// One of the six charts: the open hemisphere sign * x_axis > 0 projected
/// centrally onto the tangent plane {x_axis = sign}.
struct Chart {
  int axis = 3;  ///< 1, 2 or 3
  int sign = 1;  ///< +1 or -1

  Chart() = default;
  Chart(int axis, int sign);

  Vec3 pole() const;
  /// Zero-based indices of the two remaining axes, increasing.
  std::array<int, 2> plane_axes() const;
  /// "2-", "3+", ...
  std::string name() const;
  static Chart parse(const std::string& name);
  static std::array<Chart, 6> all();

  friend bool operator==(const Chart&, const Chart&) = default;
};

struct ChartPoint {
  Chart chart;
  Vec2 coords;
};

ChartPoint project(const Chart& chart, const SpherePoint& p);
SpherePoint lift(const Chart& chart, const Vec2& coords);
inline SpherePoint lift(const ChartPoint& c) { return lift(c.chart, c.coords); }

enum class Sign : int { Minus = -1, Plus = 1 };

struct MultiSign {
  std::array<Sign, 3> signs{Sign::Plus, Sign::Plus, Sign::Plus};

  MultiSign() = default;
  MultiSign(Sign a, Sign b, Sign c) : signs{a, b, c} {}

  Sign operator[](int i) const { return signs[i]; }
  bool all_equal() const { return signs[0] == signs[1] && signs[1] == signs[2]; }
  int count(Sign s) const;
  MultiSign negated() const;
  /// Index 0..7 with bit i set when coordinate i is negative.
  int code() const;
  static MultiSign from_code(int code);
  /// "(+,-,+)"
  std::string str() const;

  friend bool operator==(const MultiSign&, const MultiSign&) = default;
};

MultiSign multi_sign(const SpherePoint& p);

}  // namespace tlh
