#include "tlh/sampling.hpp"

#include "tlh/causal_order.hpp"

namespace tlh {

namespace {

constexpr int kMaxAttempts = 10000;

[[noreturn]] void give_up(const char* what) {
  throw GeometryError(Errc::PreconditionViolated, std::string("sampler gave up: ") + what);
}

bool usable(const AntipodalSimplexPair& pair, const SpherePoint& x) {
  return region_membership(pair, x) == Region::Omega && x.vec().cwiseAbs().minCoeff() > kSignTol;
}

bool before(const AntipodalSimplexPair& pair, const SpherePoint& a, const SpherePoint& b) {
  return usable(pair, b) && relate(pair, a, b) == CausalRelation::Before;
}

}  // namespace

SpherePoint sample_omega(Rng& rng, double margin) {
  for (int i = 0; i < kMaxAttempts; ++i) {
    const Vec3 v = rng.unit_vector();
    const bool all_pos = v.minCoeff() > 0.0;
    const bool all_neg = v.maxCoeff() < 0.0;
    if (all_pos || all_neg || v.cwiseAbs().minCoeff() < margin) continue;
    return SpherePoint(v);
  }
  give_up("omega point");
}

FutureTangent sample_future_tangent(const AntipodalSimplexPair& pair, const SpherePoint& p,
                                    Rng& rng) {
  const RegionId region = region_of(pair, p);
  const Vec2 base = region.planar(p);
  const auto gen = future_generators(region.kind());
  const double a = rng.uniform(0.05, 2.0);
  const double b = rng.uniform(0.05, 2.0);
  const Vec2 lv = a * gen[0] + b * gen[1];
  return {region, base, lv, from_log_vector(base, lv, region.quadrant())};
}

OrderedPair sample_before_pair(const AntipodalSimplexPair& pair, Rng& rng) {
  for (int i = 0; i < kMaxAttempts; ++i) {
    const SpherePoint p = sample_omega(rng);
    const FutureTangent t = sample_future_tangent(pair, p, rng);
    const SpherePoint q = t.region.from_planar(t.base + rng.uniform(0.05, 1.5) * t.vector);
    if (before(pair, p, q)) return {p, q};
  }
  give_up("ordered pair");
}

Chain sample_chain(const AntipodalSimplexPair& pair, Rng& rng, bool collinear) {
  for (int i = 0; i < kMaxAttempts; ++i) {
    const SpherePoint p = sample_omega(rng);
    const FutureTangent t = sample_future_tangent(pair, p, rng);
    const double t1 = rng.uniform(0.05, 1.5);
    const SpherePoint q = t.region.from_planar(t.base + t1 * t.vector);
    if (!before(pair, p, q)) continue;

    std::optional<SpherePoint> r;
    if (collinear) {
      r = t.region.from_planar(t.base + (t1 + rng.uniform(0.05, 1.5)) * t.vector);
    } else {
      const FutureTangent u = sample_future_tangent(pair, q, rng);
      r = u.region.from_planar(u.base + rng.uniform(0.05, 1.5) * u.vector);
    }
    if (!before(pair, q, *r)) continue;
    return {p, q, *r};
  }
  give_up("chain");
}

}  // namespace tlh
