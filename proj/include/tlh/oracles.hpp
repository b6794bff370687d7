#pragma once

// Reference computations for golden values. Self-contained: these routines
// use only Eigen and locate boundary points by marching and bisection rather
// than the closed forms of the library.

#include <optional>
#include <vector>

#include <Eigen/Core>

namespace tlh::oracle {

using V2 = Eigen::Vector2d;
using V3 = Eigen::Vector3d;

/// Sine cross ratio of four circle angles.
double angle_cross_ratio(double t1, double t2, double t3, double t4);

/// Points where the great circle with normal n enters or leaves the closed
/// positive (future) or negative (past) octant, each list sorted
/// lexicographically.
struct OctantCrossings {
  std::vector<V3> future;
  std::vector<V3> past;
};
OctantCrossings octant_crossings(const V3& normal);

/// Largest value of min_i x_i over the circle, sampled densely.
double circle_octant_depth(const V3& normal);

struct SphereChordResult {
  bool related = false;
  V3 a1 = V3::Zero();
  V3 a2 = V3::Zero();
  double funk = 0.0;
  double reverse_funk = 0.0;
  double hilbert = 0.0;
};
/// Marches backwards from p and forwards from q along their great circle.
SphereChordResult sphere_chord(const V3& p, const V3& q);

/// Relation code: 0 equal, 1 before, 2 after, 3 unrelated.
int sphere_relation(const V3& p, const V3& q);

/// Euclidean timelike Hilbert distance of the orthant cone pair; nullopt
/// when not related.
std::optional<double> euclidean_hilbert(const V3& x, const V3& y);

/// Quadrant Hilbert metric via the clipped line and its cross ratio.
double quadrant_hilbert(const V2& p, const V2& q);

/// Minkowski functional from the distances along the ray to the past
/// quadrant Q3; base in Q1 or Q2 of the plane.
double ray_functional(const V2& base, const V2& v);

/// 0 future, 1 past, 2 null, 3 spacelike, by ray clipping and perturbation.
int ray_cone_class(const V2& base, const V2& v);

/// Chart (2,-) lift of planar coordinates.
V3 lift_chart2(const V2& c);

}  // namespace tlh::oracle
