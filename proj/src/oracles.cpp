#include "tlh/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <Eigen/Geometry>

namespace tlh::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMarchSteps = 100000;

struct Basis {
  V3 e1, e2;
  V3 at(double t) const { return std::cos(t) * e1 + std::sin(t) * e2; }
};

Basis basis_from_normal(const V3& normal) {
  const V3 n = normal.normalized();
  V3 seed = V3(0.3, 0.5, 0.7);
  V3 e1 = (seed - seed.dot(n) * n).normalized();
  return {e1, n.cross(e1)};
}

// +1 in the closed positive octant, -1 in the closed negative one, else 0.
int octant(const V3& x) {
  if (x.minCoeff() >= 0.0) return 1;
  if (x.maxCoeff() <= 0.0) return -1;
  return 0;
}

// Boundary between f(lo) and f(hi), where inside(lo) != inside(hi).
double bisect(const std::function<bool(double)>& inside, double lo, double hi) {
  const bool at_lo = inside(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= std::min(lo, hi) || mid >= std::max(lo, hi)) break;
    (inside(mid) == at_lo ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// First parameter after `from` (moving by `step`, at most `steps` times)
// where cls becomes nonzero; refined by bisection.
std::optional<std::pair<double, int>> march(const std::function<int(double)>& cls, double from,
                                            double step, int steps) {
  double prev = from;
  for (int i = 1; i <= steps; ++i) {
    const double t = from + step * i;
    const int c = cls(t);
    if (c != 0) {
      const double edge = bisect([&](double s) { return cls(s) != 0; }, prev, t);
      return std::make_pair(edge, c);
    }
    prev = t;
  }
  return std::nullopt;
}

void lex_sort(std::vector<V3>& pts) {
  for (auto& p : pts) {
    for (int i = 0; i < 3; ++i) {
      if (std::abs(p[i]) < 1e-12) p[i] = 0.0;
    }
  }
  std::sort(pts.begin(), pts.end(), [](const V3& a, const V3& b) {
    for (int i = 0; i < 3; ++i) {
      if (std::abs(a[i] - b[i]) > 1e-9) return a[i] < b[i];
    }
    return false;
  });
}

// Parameter interval of the line base + t dir inside the closed quadrant Q3.
struct Clip {
  double in = -kInf;
  double out = kInf;
};

std::optional<Clip> clip_q3(const V2& base, const V2& dir) {
  Clip c;
  for (int i = 0; i < 2; ++i) {
    if (dir[i] == 0.0) {
      if (base[i] > 0.0) return std::nullopt;
      continue;
    }
    const double t = -base[i] / dir[i];
    if (dir[i] < 0.0) c.in = std::max(c.in, t);
    else c.out = std::min(c.out, t);
  }
  if (!(c.in < c.out)) return std::nullopt;
  return c;
}

// Ray functional for a direction whose ray enters Q3 after leaving the base.
std::optional<double> entering_ray(const V2& base, const V2& dir) {
  const auto c = clip_q3(base, dir);
  if (!c || !(c->in > 0.0)) return std::nullopt;
  return 0.5 * (1.0 / c->in - (std::isfinite(c->out) ? 1.0 / c->out : 0.0));
}

}  // namespace

double angle_cross_ratio(double t1, double t2, double t3, double t4) {
  return std::abs(std::sin(t4 - t2) * std::sin(t3 - t1)) /
         std::abs(std::sin(t4 - t3) * std::sin(t2 - t1));
}

OctantCrossings octant_crossings(const V3& normal) {
  const Basis b = basis_from_normal(normal);
  OctantCrossings out;
  const double step = 2.0 * kPi / kMarchSteps;
  const double t0 = 0.0123;
  for (const int side : {1, -1}) {
    auto inside = [&](double t) { return octant(b.at(t)) == side; };
    bool prev = inside(t0);
    for (int i = 1; i <= kMarchSteps; ++i) {
      const double t = t0 + step * i;
      const bool now = inside(t);
      if (now != prev) {
        const V3 x = b.at(bisect(inside, t - step, t));
        (side == 1 ? out.future : out.past).push_back(x);
      }
      prev = now;
    }
  }
  lex_sort(out.future);
  lex_sort(out.past);
  return out;
}

double circle_octant_depth(const V3& normal) {
  const Basis b = basis_from_normal(normal);
  double best = -kInf;
  for (int i = 0; i < kMarchSteps; ++i) {
    best = std::max(best, b.at(2.0 * kPi * i / kMarchSteps).minCoeff());
  }
  return best;
}

SphereChordResult sphere_chord(const V3& p_in, const V3& q_in) {
  SphereChordResult r;
  const V3 p = p_in.normalized();
  const V3 q = q_in.normalized();
  const V3 cross = p.cross(q);
  if (cross.norm() < 1e-12) return r;
  const V3 n = cross.normalized();
  const Basis b{p, n.cross(p)};
  const double phi = std::atan2(q.dot(b.e2), q.dot(b.e1));
  auto cls = [&](double t) { return octant(b.at(t)); };

  const double step = 2.0 * kPi / kMarchSteps;
  for (int i = 0; i <= 1000; ++i) {
    if (cls(phi * i / 1000.0) != 0) return r;
  }
  const auto fwd = march(cls, phi, step, kMarchSteps);
  const auto bwd = march(cls, 0.0, -step, kMarchSteps);
  if (!fwd || !bwd || fwd->second != 1 || bwd->second != -1) return r;

  const double t2 = fwd->first;
  const double t1 = bwd->first;
  // A circle that only grazes the octants has a zero-length contact.
  const double probe = 1e-6;
  if (cls(t2 + probe) != 1 || cls(t1 - probe) != -1) return r;

  r.related = true;
  r.a1 = b.at(t1);
  r.a2 = b.at(t2);
  r.funk = std::log(std::abs(std::sin(t2)) / std::abs(std::sin(t2 - phi)));
  r.reverse_funk = std::log(std::abs(std::sin(phi - t1)) / std::abs(std::sin(t1)));
  r.hilbert = 0.5 * std::log(angle_cross_ratio(t1, 0.0, phi, t2));
  return r;
}

int sphere_relation(const V3& p, const V3& q) {
  if ((p.normalized() - q.normalized()).norm() <= 1e-12) return 0;
  if (sphere_chord(p, q).related) return 1;
  if (sphere_chord(q, p).related) return 2;
  return 3;
}

std::optional<double> euclidean_hilbert(const V3& x, const V3& y) {
  const V3 w = y - x;
  if (w.norm() == 0.0) return 0.0;
  auto point = [&](double s) -> V3 { return x + s * w; };
  auto cls_tau = [&](double tau) { return octant(point(std::tan(tau))); };
  for (int i = 0; i <= 1000; ++i) {
    if (octant(point(i / 1000.0)) != 0) return std::nullopt;
  }
  const double quarter = std::atan(1.0);
  const double step = 1e-5;
  const int steps = static_cast<int>((kPi / 2.0 - quarter) / step) - 1;
  const auto fwd = march(cls_tau, quarter, step, steps);
  const int back_steps = static_cast<int>((kPi / 2.0) / step) - 1;
  const auto bwd = march(cls_tau, 0.0, -step, back_steps);

  const bool asymptotic = w.minCoeff() >= 0.0;
  if (fwd && fwd->second != 1) return std::nullopt;
  if (bwd && bwd->second != -1) return std::nullopt;
  if ((!fwd || !bwd) && !asymptotic) return std::nullopt;
  if (!fwd && !bwd) return std::nullopt;

  if (!fwd) {
    const V3 a1 = point(std::tan(bwd->first));
    return 0.5 * std::log((y - a1).norm() / (x - a1).norm());
  }
  if (!bwd) {
    const V3 a2 = point(std::tan(fwd->first));
    return 0.5 * std::log((x - a2).norm() / (y - a2).norm());
  }
  const V3 a1 = point(std::tan(bwd->first));
  const V3 a2 = point(std::tan(fwd->first));
  return 0.5 * std::log(((x - a2).norm() * (y - a1).norm()) / ((y - a2).norm() * (x - a1).norm()));
}

double quadrant_hilbert(const V2& p, const V2& q) {
  const V2 w = q - p;
  if (w.norm() == 0.0) return 0.0;
  double lo = -kInf, hi = kInf;
  for (int i = 0; i < 2; ++i) {
    if (w[i] == 0.0) continue;
    const double t = -p[i] / w[i];
    if (w[i] > 0.0) lo = std::max(lo, t);
    else hi = std::min(hi, t);
  }
  // Distances along the line in units of |w|: p at 0, q at 1.
  double ratio = 1.0;
  if (std::isfinite(lo)) ratio *= (1.0 - lo) / (0.0 - lo);
  if (std::isfinite(hi)) ratio *= (hi - 0.0) / (hi - 1.0);
  return 0.5 * std::log(ratio);
}

double ray_functional(const V2& base, const V2& v) {
  if (auto f = entering_ray(base, v)) return *f;
  if (auto f = entering_ray(base, -v)) return *f;
  return 0.0;
}

int ray_cone_class(const V2& base, const V2& v) {
  if (entering_ray(base, v)) return 1;
  if (entering_ray(base, -v)) return 0;
  const double eps = 1e-7;
  for (const double a : {eps, -eps}) {
    const V2 r(std::cos(a) * v[0] - std::sin(a) * v[1], std::sin(a) * v[0] + std::cos(a) * v[1]);
    if (entering_ray(base, r) || entering_ray(base, -r)) return 2;
  }
  return 3;
}

V3 lift_chart2(const V2& c) { return V3(c[0], -1.0, c[1]).normalized(); }

}  // namespace tlh::oracle
