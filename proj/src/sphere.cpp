#include "tlh/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Geometry>

namespace tlh {

namespace {

constexpr double kVanishingSine = 1e-14;

}  // namespace

SpherePoint::SpherePoint(const Vec3& v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw GeometryError(Errc::ZeroVector, "cannot normalize a zero or non-finite vector");
  }
  v_ = v / norm;
}

double spherical_distance(const SpherePoint& p, const SpherePoint& q) {
  return std::atan2(p.vec().cross(q.vec()).norm(), p.vec().dot(q.vec()));
}

double sin_distance(const SpherePoint& p, const SpherePoint& q) {
  return p.vec().cross(q.vec()).norm();
}

GreatCircle GreatCircle::from_normal(const Vec3& normal) {
  const Vec3 n = SpherePoint(normal).vec();
  Eigen::Index axis = 0;
  n.cwiseAbs().minCoeff(&axis);
  const Vec3 e1 = n.cross(Vec3::Unit(axis)).normalized();
  return GreatCircle(n, e1, n.cross(e1));
}

GreatCircle GreatCircle::with_origin(const SpherePoint& start, const Vec3& normal) {
  const Vec3 n = SpherePoint(normal).vec();
  const Vec3 e1 = start.vec();
  return GreatCircle(n, e1, n.cross(e1));
}

SpherePoint GreatCircle::point_at(double angle) const {
  return SpherePoint(std::cos(angle) * e1_ + std::sin(angle) * e2_);
}

double GreatCircle::angle_of(const Vec3& v) const {
  double t = std::atan2(v.dot(e2_), v.dot(e1_));
  if (t < 0.0) t += kTwoPi;
  return t >= kTwoPi ? 0.0 : t;
}

double GreatCircle::angle_of(const SpherePoint& p) const { return angle_of(p.vec()); }

bool GreatCircle::contains(const SpherePoint& p, double tol) const {
  return std::abs(p.vec().dot(n_)) <= tol;
}

GreatCircle great_circle_through(const SpherePoint& p, const SpherePoint& q) {
  const Vec3 c = p.vec().cross(q.vec());
  if (c.norm() <= kPairTol) {
    throw GeometryError(Errc::DegeneratePair, "points are equal or antipodal");
  }
  return GreatCircle::with_origin(p, c);
}

double spherical_cross_ratio(const SpherePoint& p1, const SpherePoint& p2,
                             const SpherePoint& p3, const SpherePoint& p4,
                             const GreatCircle& circle) {
  for (const SpherePoint* p : {&p1, &p2, &p3, &p4}) {
    if (!circle.contains(*p)) {
      throw GeometryError(Errc::OffCircle, "cross ratio point is not on the circle");
    }
  }
  const double s24 = sin_distance(p2, p4);
  const double s31 = sin_distance(p3, p1);
  const double s34 = sin_distance(p3, p4);
  const double s21 = sin_distance(p2, p1);

  const bool num_zero = s24 <= kVanishingSine || s31 <= kVanishingSine;
  const bool den_zero = s34 <= kVanishingSine || s21 <= kVanishingSine;
  if (num_zero && den_zero) {
    throw GeometryError(Errc::AllDegenerate, "numerator and denominator both vanish");
  }
  if (den_zero) return std::numeric_limits<double>::infinity();
  return (s24 * s31) / (s34 * s21);
}

Chart::Chart(int axis_, int sign_) : axis(axis_), sign(sign_) {
  if (axis < 1 || axis > 3 || (sign != 1 && sign != -1)) {
    throw GeometryError(Errc::InvalidArgument, "chart axis must be 1..3 and sign +-1");
  }
}

Vec3 Chart::pole() const { return static_cast<double>(sign) * Vec3::Unit(axis - 1); }

std::array<int, 2> Chart::plane_axes() const {
  switch (axis) {
    case 1: return {1, 2};
    case 2: return {0, 2};
    default: return {0, 1};
  }
}

std::string Chart::name() const {
  return std::to_string(axis) + (sign > 0 ? "+" : "-");
}

Chart Chart::parse(const std::string& name) {
  if (name.size() != 2 || name[0] < '1' || name[0] > '3' || (name[1] != '+' && name[1] != '-')) {
    throw GeometryError(Errc::InvalidArgument, "chart must look like 2- or 3+, got '" + name + "'");
  }
  return Chart(name[0] - '0', name[1] == '+' ? 1 : -1);
}

std::array<Chart, 6> Chart::all() {
  return {Chart(1, 1), Chart(2, 1), Chart(3, 1), Chart(1, -1), Chart(2, -1), Chart(3, -1)};
}

ChartPoint project(const Chart& chart, const SpherePoint& p) {
  const double height = chart.sign * p[chart.axis - 1];
  if (height <= kSignTol) {
    throw GeometryError(Errc::OutsideHemisphere, "point is not in the open hemisphere of chart " + chart.name());
  }
  const auto [i, j] = chart.plane_axes();
  return ChartPoint{chart, Vec2(p[i] / height, p[j] / height)};
}

SpherePoint lift(const Chart& chart, const Vec2& coords) {
  if (!coords.allFinite()) {
    throw GeometryError(Errc::InvalidArgument, "chart coordinates must be finite");
  }
  Vec3 v;
  const auto [i, j] = chart.plane_axes();
  v[chart.axis - 1] = chart.sign;
  v[i] = coords[0];
  v[j] = coords[1];
  return SpherePoint(v);
}

int MultiSign::count(Sign s) const {
  return static_cast<int>(std::count(signs.begin(), signs.end(), s));
}

MultiSign MultiSign::negated() const {
  auto flip = [](Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; };
  return MultiSign(flip(signs[0]), flip(signs[1]), flip(signs[2]));
}

int MultiSign::code() const {
  int c = 0;
  for (int i = 0; i < 3; ++i) {
    if (signs[i] == Sign::Minus) c |= 1 << i;
  }
  return c;
}

MultiSign MultiSign::from_code(int code) {
  auto at = [code](int i) { return (code >> i) & 1 ? Sign::Minus : Sign::Plus; };
  return MultiSign(at(0), at(1), at(2));
}

std::string MultiSign::str() const {
  std::string out = "(";
  for (int i = 0; i < 3; ++i) {
    if (i) out += ',';
    out += signs[i] == Sign::Plus ? '+' : '-';
  }
  return out + ")";
}

MultiSign multi_sign(const SpherePoint& p) {
  MultiSign ms;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(p[i]) <= kSignTol) {
      throw GeometryError(Errc::OnCoordinateCircle, "coordinate " + std::to_string(i + 1) + " is zero");
    }
    ms.signs[i] = p[i] > 0 ? Sign::Plus : Sign::Minus;
  }
  return ms;
}

}  // namespace tlh
