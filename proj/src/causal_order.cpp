#include "tlh/causal_order.hpp"

#include <algorithm>

namespace tlh {

namespace {

// Chord with p strictly before q, or nullopt. p and q are distinct points of
// Omega.
std::optional<Chord> find_chord(const AntipodalSimplexPair& pair, const SpherePoint& p,
                                const SpherePoint& q) {
  std::optional<GreatCircle> circle;
  try {
    circle = great_circle_through(p, q);
  } catch (const GeometryError&) {
    return std::nullopt;  // antipodal or numerically coincident
  }
  if (is_supporting_circle(pair, *circle)) return std::nullopt;

  BoundaryHits found;
  try {
    found = chord_boundary_hits(pair, *circle);
  } catch (const GeometryError& e) {
    if (e.code() == Errc::NoIntersection) return std::nullopt;
    throw;
  }
  if (found.face_plane) return std::nullopt;

  const auto& hits = found.hits;
  const double phi = circle->angle_of(q);
  if (std::any_of(hits.begin(), hits.end(), [phi](const BoundaryHit& h) { return h.angle <= phi; })) {
    return std::nullopt;
  }
  // Hits are sorted; all lie after q. The first one closes the arc forward,
  // the last one (just behind p going backwards) closes it backward.
  const BoundaryHit& front = hits.front();
  const BoundaryHit& back = hits.back();
  if (front.side != Side::Future || back.side != Side::Past) return std::nullopt;

  return Chord{*circle, back, front, p, q, back.angle - kTwoPi, 0.0, phi, front.angle};
}

void require_omega(const AntipodalSimplexPair& pair, const SpherePoint& x, const char* name) {
  if (region_membership(pair, x) != Region::Omega) {
    throw GeometryError(Errc::NotInOmega, std::string(name) + " is not in Omega");
  }
}

}  // namespace

const char* to_string(CausalRelation r) {
  switch (r) {
    case CausalRelation::Equal: return "equal";
    case CausalRelation::Before: return "before";
    case CausalRelation::After: return "after";
    case CausalRelation::Unrelated: return "unrelated";
  }
  return "?";
}

CausalRelation relate(const AntipodalSimplexPair& pair, const SpherePoint& p, const SpherePoint& q) {
  require_omega(pair, p, "first point");
  require_omega(pair, q, "second point");
  if ((p.vec() - q.vec()).norm() <= kEqualTol) return CausalRelation::Equal;
  if (find_chord(pair, p, q)) return CausalRelation::Before;
  if (find_chord(pair, q, p)) return CausalRelation::After;
  return CausalRelation::Unrelated;
}

Chord chord(const AntipodalSimplexPair& pair, const SpherePoint& p, const SpherePoint& q) {
  if (relate(pair, p, q) != CausalRelation::Before) {
    throw GeometryError(Errc::NotRelated, "q is not in the future of p");
  }
  return *find_chord(pair, p, q);
}

}  // namespace tlh
