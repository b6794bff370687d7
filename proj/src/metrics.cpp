#include "tlh/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace tlh {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Open interval of s with x + s w inside the open orthant of the given sign.
struct Interval {
  double lo = -kInf;
  double hi = kInf;
  bool empty() const { return !(lo < hi); }
};

Interval orthant_interval(const Vec3& x, const Vec3& w, double sign) {
  Interval in;
  for (int i = 0; i < 3; ++i) {
    const double xi = sign * x[i];
    const double wi = sign * w[i];
    if (wi == 0.0) {
      if (xi <= 0.0) return {0.0, 0.0};
      continue;
    }
    const double root = -xi / wi;
    if (wi > 0.0) in.lo = std::max(in.lo, root);
    else in.hi = std::min(in.hi, root);
  }
  return in;
}

bool in_closed_orthant(const Vec3& x, double sign) { return (sign * x).minCoeff() >= 0.0; }

}  // namespace

HilbertBreakdown hilbert_breakdown(const AntipodalSimplexPair& pair, const SpherePoint& p,
                                   const SpherePoint& q) {
  const CausalRelation rel = relate(pair, p, q);
  if (rel == CausalRelation::Equal) return {};
  if (rel != CausalRelation::Before) {
    throw GeometryError(Errc::NotRelated, "distance needs q in the future of p");
  }
  const Chord c = chord(pair, p, q);
  const SpherePoint& a1 = c.a1.point;
  const SpherePoint& a2 = c.a2.point;

  HilbertBreakdown out;
  out.funk = std::log(sin_distance(p, a2) / sin_distance(q, a2));
  out.reverse_funk = std::log(sin_distance(q, a1) / sin_distance(p, a1));
  out.symmetrized = 0.5 * (out.funk + out.reverse_funk);
  out.cross_ratio = spherical_cross_ratio(a1, p, q, a2, c.circle);
  out.hilbert = 0.5 * std::log(out.cross_ratio);
  if (!(std::abs(out.hilbert - out.symmetrized) <= kMismatchTol)) {
    throw GeometryError(Errc::InternalMismatch, "cross ratio and symmetrized Funk disagree");
  }
  return out;
}

double funk(const AntipodalSimplexPair& pair, const SpherePoint& p, const SpherePoint& q) {
  return hilbert_breakdown(pair, p, q).funk;
}

double reverse_funk(const AntipodalSimplexPair& pair, const SpherePoint& p, const SpherePoint& q) {
  return hilbert_breakdown(pair, p, q).reverse_funk;
}

double hilbert(const AntipodalSimplexPair& pair, const SpherePoint& p, const SpherePoint& q) {
  return hilbert_breakdown(pair, p, q).hilbert;
}

double euclidean_hilbert(const OrthantConePair& /*cones*/, const Vec3& x, const Vec3& y) {
  for (const Vec3* v : {&x, &y}) {
    if (in_closed_orthant(*v, 1.0) || in_closed_orthant(*v, -1.0)) {
      throw GeometryError(Errc::NotInOmega, "point lies in a closed cone");
    }
  }
  const Vec3 w = y - x;
  if (w.norm() <= kEqualTol * std::max(1.0, x.norm())) return 0.0;

  const Interval past = orthant_interval(x, w, -1.0);
  const Interval future = orthant_interval(x, w, 1.0);
  // An empty interval still admits an ideal endpoint when the direction is
  // asymptotic to the cone, i.e. w lies in the closed positive orthant.
  const bool asymptotic = in_closed_orthant(w, 1.0);

  std::optional<double> s1;
  if (!past.empty()) {
    if (!(past.hi < 0.0)) throw GeometryError(Errc::NotRelated, "past cone is not behind x");
    s1 = past.hi;
  } else if (!asymptotic) {
    throw GeometryError(Errc::NotRelated, "line misses the past cone");
  }
  std::optional<double> s2;
  if (!future.empty()) {
    if (!(future.lo > 1.0)) throw GeometryError(Errc::NotRelated, "future cone is not ahead of y");
    s2 = future.lo;
  } else if (!asymptotic) {
    throw GeometryError(Errc::NotRelated, "line misses the future cone");
  }
  if (!s1 && !s2) throw GeometryError(Errc::NotRelated, "both endpoints are ideal");

  // Cross ratio of the parameters (s1, 0, 1, s2).
  double cr;
  if (!s2) cr = (1.0 - *s1) / (-*s1);
  else if (!s1) cr = *s2 / (*s2 - 1.0);
  else cr = ((1.0 - *s1) * *s2) / ((-*s1) * (*s2 - 1.0));
  return 0.5 * std::log(cr);
}

SpherePoint cone_project(const Vec3& x) { return SpherePoint(x); }

double lorentz_distance(const LorentzEvent& x, const LorentzEvent& y) {
  if (x.size() < 2 || x.size() != y.size()) {
    throw GeometryError(Errc::InvalidArgument, "events need equal dimension of at least 2");
  }
  const LorentzEvent d = y - x;
  if (d.isZero(0.0)) return 0.0;
  const double lambda = d[0] * d[0] - d.tail(d.size() - 1).squaredNorm();
  if (!(d[0] > 0.0) || !(lambda > 0.0)) {
    throw GeometryError(Errc::NotRelated, "y is not in the timelike future of x");
  }
  return std::sqrt(lambda);
}

namespace {

void require_positive(const Vec2& p, const Vec2& q) {
  if (!(p.minCoeff() > 0.0) || !(q.minCoeff() > 0.0)) {
    throw GeometryError(Errc::NonPositiveInput, "quadrant points need positive coordinates");
  }
}

}  // namespace

double classical_hilbert_quadrant(const Vec2& p, const Vec2& q) {
  require_positive(p, q);
  const double a = std::abs(std::log(p[0] / q[0]));
  const double b = std::abs(std::log(p[1] / q[1]));
  const double c = std::abs(std::log((p[0] * q[1]) / (q[0] * p[1])));
  return 0.5 * std::max({a, b, c});
}

double classical_hilbert_quadrant_cases(const Vec2& p, const Vec2& q) {
  require_positive(p, q);
  const Vec2 w = q - p;
  if (w.isZero(0.0)) return 0.0;

  // Axis hit behind p (a) and beyond q (b): 0 = the y axis (x1 = 0),
  // 1 = the x axis (x2 = 0), -1 = at infinity.
  int a = -1, b = -1;
  double ta = -kInf, tb = kInf;
  for (int i = 0; i < 2; ++i) {
    if (w[i] == 0.0) continue;
    const double t = -p[i] / w[i];
    if (w[i] > 0.0 && t > ta) { ta = t; a = i; }
    if (w[i] < 0.0 && t < tb) { tb = t; b = i; }
  }
  const double l1 = std::log(q[0] / p[0]);
  const double l2 = std::log(q[1] / p[1]);
  if (a == 0 && b == 1) return 0.5 * (l1 - l2);
  if (a == 1 && b == 0) return 0.5 * (l2 - l1);
  if (a == 0) return 0.5 * l1;
  if (b == 0) return -0.5 * l1;
  if (a == 1) return 0.5 * l2;
  return -0.5 * l2;
}

double degenerate_chart_hilbert(const Vec2& p, const Vec2& q, const Chart& chart) {
  const double s = chart.sign;
  const Vec2 pp = -s * p;
  const Vec2 qq = -s * q;
  if (!(pp.minCoeff() > 0.0) || !(qq.minCoeff() > 0.0)) {
    throw GeometryError(Errc::OutOfRegion, "points are not in the single-minus quadrant of chart " +
                                               chart.name());
  }
  const Vec2 w = qq - pp;
  if (w.isZero(0.0)) return 0.0;
  if (!(w[0] * w[1] > 0.0)) {
    throw GeometryError(Errc::NotRelated, "chart line through the points has nonpositive slope");
  }
  return 0.5 * std::min(std::abs(std::log(qq[0] / pp[0])), std::abs(std::log(qq[1] / pp[1])));
}

}  // namespace tlh
