#pragma once

// Timelike distances: spherical Funk, reverse Funk and Hilbert on the
// simplex pair, the Euclidean Hilbert distance of the orthant cones, the
// radial projection between them, the Lorentzian baseline and the planar
// quadrant formulas.

#include <Eigen/Core>

#include "tlh/causal_order.hpp"

namespace tlh {

/// Allowed gap between the two Hilbert evaluations before InternalMismatch.
inline constexpr double kMismatchTol = 1e-8;

double funk(const AntipodalSimplexPair& pair, const SpherePoint& p, const SpherePoint& q);
double reverse_funk(const AntipodalSimplexPair& pair, const SpherePoint& p, const SpherePoint& q);
/// Half the log of the sine cross ratio [a1, p, q, a2].
double hilbert(const AntipodalSimplexPair& pair, const SpherePoint& p, const SpherePoint& q);

struct HilbertBreakdown {
  double funk = 0.0;
  double reverse_funk = 0.0;
  double symmetrized = 0.0;   ///< (funk + reverse_funk) / 2
  double cross_ratio = 1.0;   ///< [a1, p, q, a2]
  double hilbert = 0.0;       ///< log(cross_ratio) / 2
};

/// All quantities for a Before or Equal pair; throws NotRelated otherwise.
HilbertBreakdown hilbert_breakdown(const AntipodalSimplexPair& pair, const SpherePoint& p,
                                   const SpherePoint& q);

/// Euclidean timelike Hilbert distance between points of R^3 outside the
/// closed orthant cones; ideal endpoints use the limiting cross ratio.
double euclidean_hilbert(const OrthantConePair& cones, const Vec3& x, const Vec3& y);

/// Radial projection R^3 \ {0} -> S^2.
SpherePoint cone_project(const Vec3& x);

using LorentzEvent = Eigen::VectorXd;

/// sqrt(d1^2 - sum_{i>1} di^2) for d = y - x with d1 > 0 and a positive
/// form; zero when x = y.
double lorentz_distance(const LorentzEvent& x, const LorentzEvent& y);

/// Hilbert metric of the open quadrant, closed form.
double classical_hilbert_quadrant(const Vec2& p, const Vec2& q);
/// Same metric by locating the chord endpoints and picking one of the six
/// cases.
double classical_hilbert_quadrant_cases(const Vec2& p, const Vec2& q);

/// Timelike Hilbert distance of two chart points in a single-minus quadrant:
/// half the smaller of the two coordinate log ratios. Points of a '+' chart
/// use the antipodal map to reach the '-' chart.
double degenerate_chart_hilbert(const Vec2& p, const Vec2& q, const Chart& chart);

}  // namespace tlh
