#include "tlh/symmetry.hpp"

#include <cmath>

#include "tlh/metrics.hpp"
#include "tlh/sampling.hpp"

namespace tlh {

namespace {

int index_of(const MultiSign& ms, Sign s) {
  for (int i = 0; i < 3; ++i) {
    if (ms[i] == s) return i;
  }
  return -1;
}

// (C^k y)_i = y_{i+k}
Vec3 cycle_vec(const Vec3& y, int k) {
  Vec3 out;
  for (int i = 0; i < 3; ++i) out[i] = y[(i + k) % 3];
  return out;
}

}  // namespace

RegionKind RegionId::kind() const {
  return ms.count(Sign::Minus) == 1 ? RegionKind::TypeQ1 : RegionKind::TypeQ2;
}

int RegionId::pivot() const {
  if (kind() == RegionKind::TypeQ1) return index_of(ms, Sign::Minus);
  return (index_of(ms, Sign::Plus) + 2) % 3;
}

std::array<int, 2> RegionId::axes() const {
  if (kind() == RegionKind::TypeQ1) {
    const int m = index_of(ms, Sign::Minus);
    return {(m + 2) % 3, (m + 1) % 3};
  }
  const int a = index_of(ms, Sign::Plus);
  return {(a + 1) % 3, a};
}

Vec2 RegionId::planar(const SpherePoint& p) const {
  const double h = -p[pivot()];
  if (!(h > 0.0)) throw GeometryError(Errc::OutOfRegion, "point is outside the region chart");
  const auto [ix, iy] = axes();
  return Vec2(p[ix] / h, p[iy] / h);
}

SpherePoint RegionId::from_planar(const Vec2& c) const {
  Vec3 v;
  const auto [ix, iy] = axes();
  v[pivot()] = -1.0;
  v[ix] = c[0];
  v[iy] = c[1];
  return SpherePoint(v);
}

std::array<RegionId, 6> RegionId::all() {
  std::array<RegionId, 6> out;
  for (int code = 1; code <= 6; ++code) out[code - 1] = RegionId{MultiSign::from_code(code)};
  return out;
}

RegionId region_of(const AntipodalSimplexPair& pair, const SpherePoint& p) {
  if (region_membership(pair, p) != Region::Omega) {
    throw GeometryError(Errc::NotInOmega, "point is not in Omega");
  }
  return RegionId{multi_sign(SpherePoint(pair.undeform(p.vec())))};
}

bool GroupElement::is_identity(double tol) const {
  return cycle == 0 && !flip && (scale - Vec2::Ones()).cwiseAbs().maxCoeff() <= tol;
}

GroupElement GroupElement::compose(const GroupElement& other) const {
  const Vec3 dg = diagonal();
  const Vec3 dh = other.diagonal();
  // Moving this scaling past other's cycle shifts its entries by other.cycle.
  Vec3 d;
  for (int j = 0; j < 3; ++j) d[j] = dg[(j - other.cycle + 3) % 3] * dh[j];
  return {Vec2(d[0] / d[2], d[1] / d[2]), (cycle + other.cycle) % 3, flip != other.flip};
}

GroupElement GroupElement::inverse() const {
  const Vec3 dg = diagonal();
  Vec3 d;
  for (int j = 0; j < 3; ++j) d[j] = 1.0 / dg[(j + cycle) % 3];
  return {Vec2(d[0] / d[2], d[1] / d[2]), (3 - cycle) % 3, flip};
}

Vec3 apply(const GroupElement& g, const Vec3& v) {
  const Vec3 y = cycle_vec(g.diagonal().cwiseProduct(v), g.cycle);
  return g.flip ? Vec3(-y) : y;
}

SpherePoint apply(const GroupElement& g, const SpherePoint& p) {
  return SpherePoint(apply(g, p.vec()));
}

MultiSign apply(const GroupElement& g, const MultiSign& ms) {
  MultiSign out;
  for (int i = 0; i < 3; ++i) out.signs[i] = ms[(i + g.cycle) % 3];
  return g.flip ? out.negated() : out;
}

GroupElement transitivity_witness(const AntipodalSimplexPair& pair, const SpherePoint& p,
                                  const SpherePoint& q) {
  const RegionId rp = region_of(pair, p);
  const RegionId rq = region_of(pair, q);
  for (const bool f : {false, true}) {
    for (int k = 0; k < 3; ++k) {
      const GroupElement g{Vec2::Ones(), k, f};
      if (apply(g, rp.ms) != rq.ms) continue;
      // Undo flip and cycle on q, then read the diagonal off the ratios.
      const Vec3 target = cycle_vec(f ? Vec3(-q.vec()) : q.vec(), 3 - k);
      const Vec3 d = target.cwiseQuotient(p.vec());
      return {Vec2(d[0] / d[2], d[1] / d[2]), k, f};
    }
  }
  throw GeometryError(Errc::InternalMismatch, "no cycle and flip relate the two regions");
}

OrbitReport orbit_check(const AntipodalSimplexPair& pair, const GroupElement& g,
                        std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw GeometryError(Errc::InvalidArgument, "orbit check needs samples >= 1");
  OrbitReport report;
  report.samples = samples;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng(seed, i);
    const OrderedPair s = sample_before_pair(pair, rng);
    const double h = hilbert(pair, s.p, s.q);
    SpherePoint a = apply(g, s.p);
    SpherePoint b = apply(g, s.q);
    if (!g.preserves_order()) std::swap(a, b);
    if (relate(pair, a, b) != CausalRelation::Before) {
      report.order_ok = false;
      continue;
    }
    report.max_deviation = std::max(report.max_deviation, std::abs(hilbert(pair, a, b) - h));
  }
  return report;
}

}  // namespace tlh
