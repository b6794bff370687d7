#pragma once

// Command bodies behind the tlh executable, kept separate from argument
// parsing so the golden table can run them directly.

#include <string>

#include "tlh/convex_bodies.hpp"
#include "tlh/finsler.hpp"
#include "tlh/report.hpp"

namespace tlh {

/// {relation, funk, reverse_funk, hilbert}. Distances are omitted for
/// unrelated pairs; for an After pair they are those of (q, p).
Json dist_report(const AntipodalSimplexPair& pair, const SpherePoint& p, const SpherePoint& q);

/// {class, functional, log_vector, normed_value}; throws InternalMismatch
/// when the chart and Log evaluations disagree.
Json finsler_report(Quadrant quadrant, const Vec2& base, const Vec2& vector);

std::string indicatrix_csv(RegionKind kind, std::size_t count, double extent = kIndicatrixExtent);
std::string indicatrix_svg(RegionKind kind, std::size_t count, double extent = kIndicatrixExtent);

}  // namespace tlh
