#pragma once

// The causal order on the complement of the two simplices and the chord
// (a1, p, q, a2) realizing it.

#include <optional>

#include "tlh/convex_bodies.hpp"

namespace tlh {

enum class CausalRelation { Equal, Before, After, Unrelated };

const char* to_string(CausalRelation r);

/// Chordal distance below which two points are equal.
inline constexpr double kEqualTol = 1e-12;

struct Chord {
  GreatCircle circle;  ///< e1 = p, q at angle_q in (0, pi)
  BoundaryHit a1;      ///< past side
  BoundaryHit a2;      ///< future side
  SpherePoint p;
  SpherePoint q;
  /// Angles on `circle`; a1 is reported negative so that
  /// angle_a1 < 0 = angle_p < angle_q < angle_a2.
  double angle_a1 = 0.0;
  double angle_p = 0.0;
  double angle_q = 0.0;
  double angle_a2 = 0.0;
};

/// Throws NotInOmega when either point is outside Omega.
CausalRelation relate(const AntipodalSimplexPair& pair, const SpherePoint& p, const SpherePoint& q);

/// The chord of a Before pair; throws NotRelated otherwise.
Chord chord(const AntipodalSimplexPair& pair, const SpherePoint& p, const SpherePoint& q);

}  // namespace tlh
