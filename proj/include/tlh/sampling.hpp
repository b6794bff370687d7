#pragma once

// Random points, ordered pairs and chains in Omega for the property suites.
// Everything is driven by an Rng so a (seed, index) pair fixes the sample.

#include <optional>

#include "tlh/rng.hpp"
#include "tlh/symmetry.hpp"

namespace tlh {

/// Points closer than this to a coordinate circle are rejected.
inline constexpr double kSampleMargin = 1e-3;

/// Uniform on Omega minus a thin band around the coordinate circles.
SpherePoint sample_omega(Rng& rng, double margin = kSampleMargin);

struct FutureTangent {
  RegionId region;
  Vec2 base;        ///< region coordinates
  Vec2 log_vector;  ///< in the future cone of the region norm
  Vec2 vector;      ///< the same vector in region coordinates
};

/// A timelike future vector at p: positive combination of the cone
/// generators with weights in [0.05, 2].
FutureTangent sample_future_tangent(const AntipodalSimplexPair& pair, const SpherePoint& p,
                                    Rng& rng);

struct OrderedPair {
  SpherePoint p;
  SpherePoint q;
};

struct Chain {
  SpherePoint p;
  SpherePoint q;
  SpherePoint r;
};

/// p uniform on Omega, q = p + t v in region coordinates with v future
/// timelike and t in [0.05, 1.5]; retried until relate(p, q) = Before.
OrderedPair sample_before_pair(const AntipodalSimplexPair& pair, Rng& rng);

/// p < q < r. Collinear chains keep one chart line; otherwise each step
/// draws a fresh direction in the region of its starting point.
Chain sample_chain(const AntipodalSimplexPair& pair, Rng& rng, bool collinear);

}  // namespace tlh
