#pragma once

// The six regions of Omega and the action of (R+)^2 x Z3 x Z2.

#include <array>
#include <cstdint>

#include "tlh/convex_bodies.hpp"
#include "tlh/finsler.hpp"

namespace tlh {

/// A region of Omega, named by its mixed multi-sign.
///
/// Region coordinates: with pivot axis m and axes (ix, iy), a point maps to
/// (x_ix / -x_m, x_iy / -x_m).
///  - one minus sign at axis m: pivot m, ix = m-1, iy = m+1 (cyclic), the
///    image is Q1 and the norm is TypeQ1;
///  - one plus sign at axis a: pivot a-1, ix = a+1, iy = a, the image is Q2
///    and the norm is TypeQ2.
/// For (+,-,+) and (-,-,+) these are the plain coordinates of chart (2,-).
/// The coordinate cycle maps the table to itself.
struct RegionId {
  MultiSign ms;

  RegionKind kind() const;
  Quadrant quadrant() const { return kind() == RegionKind::TypeQ1 ? Quadrant::Q1 : Quadrant::Q2; }
  /// Zero-based pivot axis and planar axes.
  int pivot() const;
  std::array<int, 2> axes() const;
  Chart chart() const { return Chart(pivot() + 1, -1); }

  /// Region coordinates of a point with pivot coordinate < 0.
  Vec2 planar(const SpherePoint& p) const;
  SpherePoint from_planar(const Vec2& c) const;

  /// The six regions ordered by multi-sign code.
  static std::array<RegionId, 6> all();

  friend bool operator==(const RegionId&, const RegionId&) = default;
};

/// Throws NotInOmega outside Omega and OnCoordinateCircle on a coordinate
/// circle.
RegionId region_of(const AntipodalSimplexPair& pair, const SpherePoint& p);

/// flip^f o cycle^k o diag(l1, l2, 1), acting projectively. cycle maps
/// (x1, x2, x3) to (x2, x3, x1).
struct GroupElement {
  Vec2 scale{1.0, 1.0};
  int cycle = 0;  ///< 0, 1, 2
  bool flip = false;

  static GroupElement identity() { return {}; }
  static GroupElement scaling(double l1, double l2) { return {Vec2(l1, l2), 0, false}; }
  static GroupElement rotation(int k) { return {Vec2(1.0, 1.0), ((k % 3) + 3) % 3, false}; }
  static GroupElement antipodal() { return {Vec2(1.0, 1.0), 0, true}; }

  Vec3 diagonal() const { return Vec3(scale[0], scale[1], 1.0); }
  bool is_identity(double tol = 0.0) const;
  /// Preserves the order (trivial flip).
  bool preserves_order() const { return !flip; }

  /// (*this) o other: apply other first.
  GroupElement compose(const GroupElement& other) const;
  GroupElement inverse() const;
};

SpherePoint apply(const GroupElement& g, const SpherePoint& p);
Vec3 apply(const GroupElement& g, const Vec3& v);
MultiSign apply(const GroupElement& g, const MultiSign& ms);

/// A group element mapping p to q (both in Omega, off coordinate circles).
GroupElement transitivity_witness(const AntipodalSimplexPair& pair, const SpherePoint& p,
                                  const SpherePoint& q);

struct OrbitReport {
  std::size_t samples = 0;
  double max_deviation = 0.0;
  /// Every image pair had the expected order (reversed under the flip).
  bool order_ok = true;
};

/// Checks that g preserves H on sampled Before pairs, reversing the order
/// when g contains the flip.
OrbitReport orbit_check(const AntipodalSimplexPair& pair, const GroupElement& g,
                        std::size_t samples, std::uint64_t seed);

}  // namespace tlh
