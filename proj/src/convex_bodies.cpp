#include "tlh/convex_bodies.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Geometry>

#include "tlh/rng.hpp"

namespace tlh {

namespace {

constexpr double kDedupTol = 1e-9;

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t >= kTwoPi ? 0.0 : t;
}

// A closed subset of [0, 2 pi] stored as sorted disjoint intervals.
using Intervals = std::vector<std::pair<double, double>>;

Intervals arc_intervals(double center, double half_width) {
  const double lo = wrap_angle(center - half_width);
  const double hi = lo + 2.0 * half_width;
  if (hi <= kTwoPi) return {{lo, hi}};
  return {{0.0, hi - kTwoPi}, {lo, kTwoPi}};
}

Intervals intersect(const Intervals& a, const Intervals& b) {
  Intervals out;
  for (const auto& [alo, ahi] : a) {
    for (const auto& [blo, bhi] : b) {
      const double lo = std::max(alo, blo);
      const double hi = std::min(ahi, bhi);
      if (lo <= hi) out.emplace_back(lo, hi);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Arc> to_arc(const Intervals& set) {
  if (set.empty()) return std::nullopt;
  std::vector<Arc> arcs;
  for (const auto& [lo, hi] : set) arcs.push_back({lo, hi - lo});
  // Glue a piece ending at 2 pi to one starting at 0.
  if (arcs.size() > 1 && arcs.front().start <= 0.0 &&
      arcs.back().start + arcs.back().length >= kTwoPi) {
    arcs.back().length += arcs.front().length;
    arcs.erase(arcs.begin());
  }
  return *std::max_element(arcs.begin(), arcs.end(),
                           [](const Arc& x, const Arc& y) { return x.length < y.length; });
}

// Closed half circle {t : s * (a cos t + b sin t) >= 0}, or nullopt when the
// constraint holds on the whole circle.
std::optional<Intervals> half_circle(double a, double b) {
  if (std::hypot(a, b) <= kSignTol) return std::nullopt;
  return arc_intervals(std::atan2(b, a), kPi / 2.0);
}

bool in_open_body(const ConvexBody& body, const Vec3& w) {
  return std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, SimplexBody>) {
          for (int i = 0; i < 3; ++i) {
            if (static_cast<int>(b.orthant[i]) * w[i] <= kSignTol) return false;
          }
          return true;
        } else {
          return b.center.vec().dot(w) > std::cos(b.radius);
        }
      },
      body);
}

Vec3 body_center(const ConvexBody& body) {
  return std::visit(
      [](const auto& b) -> Vec3 {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, SimplexBody>) {
          return Vec3(static_cast<int>(b.orthant[0]), static_cast<int>(b.orthant[1]),
                      static_cast<int>(b.orthant[2]))
              .normalized();
        } else {
          return b.center.vec();
        }
      },
      body);
}

// Largest value of c.x over unit vectors x of the closed orthant.
double max_dot_over_orthant(const Vec3& c, const MultiSign& orthant) {
  Vec3 clipped = Vec3::Zero();
  double best_vertex = -1.0;
  for (int i = 0; i < 3; ++i) {
    const double s = static_cast<int>(orthant[i]) * c[i];
    if (s > 0.0) clipped[i] = c[i];
    best_vertex = std::max(best_vertex, s);
  }
  const double n = clipped.norm();
  return n > 0.0 ? n : best_vertex;
}

}  // namespace

const char* to_string(Side side) { return side == Side::Past ? "past" : "future"; }

const char* to_string(Region region) {
  switch (region) {
    case Region::Future: return "future";
    case Region::Past: return "past";
    case Region::Omega: return "omega";
    case Region::Boundary: return "boundary";
  }
  return "?";
}

AntipodalSimplexPair::AntipodalSimplexPair(const Vec3& deformation) {
  if (!(deformation.minCoeff() > 0.0) || !deformation.allFinite()) {
    throw GeometryError(Errc::InvalidArgument, "deformation entries must be positive");
  }
  diag_ = deformation / std::cbrt(deformation.prod());
}

Region region_membership(const AntipodalSimplexPair& pair, const SpherePoint& p) {
  const Vec3 y = pair.undeform(p.vec()).normalized();
  if (y.minCoeff() > kSignTol) return Region::Future;
  if (y.maxCoeff() < -kSignTol) return Region::Past;
  if (y.minCoeff() >= -kSignTol || y.maxCoeff() <= kSignTol) return Region::Boundary;
  return Region::Omega;
}

BoundaryHits chord_boundary_hits(const AntipodalSimplexPair& /*pair*/, const GreatCircle& circle) {
  // The deformation preserves both simplices as sets, so the boundary is the
  // union of coordinate-plane arcs for every pair.
  BoundaryHits result;
  const Vec3& n = circle.normal();
  for (int axis = 0; axis < 3; ++axis) {
    const Vec3 dir = n.cross(Vec3::Unit(axis));
    if (dir.norm() <= kSignTol) {
      result.face_plane = axis + 1;
      continue;
    }
    for (const double s : {1.0, -1.0}) {
      Vec3 c = s * dir.normalized();
      c[axis] = 0.0;
      const int j = (axis + 1) % 3;
      const int k = (axis + 2) % 3;
      std::optional<Side> side;
      if (c[j] >= -kSignTol && c[k] >= -kSignTol) side = Side::Future;
      else if (c[j] <= kSignTol && c[k] <= kSignTol) side = Side::Past;
      if (!side) continue;

      std::uint8_t faces = 0;
      for (int a = 0; a < 3; ++a) {
        if (std::abs(c[a]) <= kSignTol) {
          c[a] = 0.0;
          faces |= static_cast<std::uint8_t>(1u << a);
        }
      }
      const SpherePoint point(c);
      auto same = std::find_if(result.hits.begin(), result.hits.end(), [&](const BoundaryHit& h) {
        return (h.point.vec() - point.vec()).norm() <= kDedupTol;
      });
      if (same != result.hits.end()) {
        same->faces |= faces;
        continue;
      }
      result.hits.push_back(BoundaryHit{point, faces, *side, circle.angle_of(point)});
    }
  }

  const auto count = [&](Side side) {
    return std::count_if(result.hits.begin(), result.hits.end(),
                         [side](const BoundaryHit& h) { return h.side == side; });
  };
  if (count(Side::Future) == 0 || count(Side::Past) == 0) {
    throw GeometryError(Errc::NoIntersection, "circle misses the simplex boundaries");
  }
  std::sort(result.hits.begin(), result.hits.end(),
            [](const BoundaryHit& a, const BoundaryHit& b) { return a.angle < b.angle; });
  return result;
}

bool is_supporting_circle(const AntipodalSimplexPair& /*pair*/, const GreatCircle& circle) {
  // A circle with normal m supports the closed positive orthant iff m.x keeps
  // one sign on it and vanishes somewhere, i.e. m >= 0 with a zero entry (up
  // to sign). The past simplex is the antipode, so it has the same circles.
  const Vec3& m = circle.normal();
  const bool touches = m.cwiseAbs().minCoeff() <= kSupportTol;
  return touches && (m.minCoeff() >= -kSupportTol || m.maxCoeff() <= kSupportTol);
}

bool in_supporting_circle(const AntipodalSimplexPair& pair, const SpherePoint& a,
                          const SpherePoint& b) {
  return is_supporting_circle(pair, great_circle_through(a, b));
}

std::optional<Arc> circle_section(const ConvexBody& body, const GreatCircle& circle) {
  const Vec3& e1 = circle.e1();
  const Vec3& e2 = circle.e2();
  return std::visit(
      [&](const auto& b) -> std::optional<Arc> {
        using T = std::decay_t<decltype(b)>;
        Intervals set{{0.0, kTwoPi}};
        if constexpr (std::is_same_v<T, SimplexBody>) {
          for (int i = 0; i < 3; ++i) {
            const double s = static_cast<int>(b.orthant[i]);
            if (auto half = half_circle(s * e1[i], s * e2[i])) set = intersect(set, *half);
          }
        } else {
          const double a = b.center.vec().dot(e1);
          const double c = b.center.vec().dot(e2);
          const double r = std::hypot(a, c);
          const double level = std::cos(b.radius);
          if (r < level) return std::nullopt;
          set = intersect(set, arc_intervals(std::atan2(c, a), std::acos(std::min(1.0, level / r))));
        }
        return to_arc(set);
      },
      body);
}

bool closures_intersect(const ConvexBody& a, const ConvexBody& b) {
  struct Visitor {
    bool operator()(const SimplexBody& x, const SimplexBody& y) const {
      for (int i = 0; i < 3; ++i) {
        if (x.orthant[i] == y.orthant[i]) return true;
      }
      return false;
    }
    bool operator()(const CapBody& x, const CapBody& y) const {
      return spherical_distance(x.center, y.center) <= x.radius + y.radius;
    }
    bool operator()(const CapBody& x, const SimplexBody& y) const {
      const double m = max_dot_over_orthant(x.center.vec(), y.orthant);
      return std::acos(std::clamp(m, -1.0, 1.0)) <= x.radius;
    }
    bool operator()(const SimplexBody& x, const CapBody& y) const { return (*this)(y, x); }
  };
  return std::visit(Visitor{}, a, b);
}

GoodPositionResult good_position_check(const ConvexBody& past, const ConvexBody& future,
                                       std::size_t samples, std::uint64_t seed) {
  if (samples == 0) {
    throw GeometryError(Errc::InvalidArgument, "good position check needs at least one sample");
  }
  GoodPositionResult result;
  if (closures_intersect(past, future)) {
    result.pass = false;
    result.failed_condition = 1;
    return result;
  }
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(seed, i);
    const GreatCircle circle = GreatCircle::from_normal(rng.unit_vector());
    const auto a = circle_section(past, circle);
    const auto b = circle_section(future, circle);
    if (!a || !b) continue;
    ++result.circles_checked;
    const double gap_ab = wrap_angle(b->start - (a->start + a->length));
    const double gap_ba = wrap_angle(a->start - (b->start + b->length));
    const double longest = std::max(gap_ab, gap_ba);
    if (longest >= kPi - 1e-9) {
      result.pass = false;
      result.failed_condition = 2;
      result.witness = circle;
      result.witness_arc = longest;
      return result;
    }
  }
  return result;
}

GoodPositionResult good_position_check(const AntipodalSimplexPair& /*pair*/, std::size_t samples,
                                       std::uint64_t seed) {
  const SimplexBody past{MultiSign(Sign::Minus, Sign::Minus, Sign::Minus)};
  const SimplexBody future{MultiSign(Sign::Plus, Sign::Plus, Sign::Plus)};
  return good_position_check(past, future, samples, seed);
}

std::pair<SpherePoint, SpherePoint> antipodal_witness(const AntipodalSimplexPair& pair) {
  const SpherePoint w(pair.deformation());
  return {w, w.antipode()};
}

std::pair<SpherePoint, SpherePoint> antipodal_witness(const ConvexBody& past,
                                                      const ConvexBody& future) {
  if (closures_intersect(past, future)) {
    throw GeometryError(Errc::PreconditionViolated, "bodies are not in good position");
  }
  for (const Vec3& w : {body_center(future), Vec3(-body_center(past))}) {
    if (in_open_body(future, w) && in_open_body(past, -w)) {
      const SpherePoint p(w);
      return {p, p.antipode()};
    }
  }
  throw GeometryError(Errc::PreconditionViolated, "no antipodal pair of interior points");
}

}  // namespace tlh
