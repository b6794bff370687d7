#pragma once

// The antipodal pair of standard spherical simplices, their boundary
// intersections with great circles, supporting circles and the good
// position predicate for pairs of convex spherical bodies.

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "tlh/sphere.hpp"

namespace tlh {

/// Contact tolerance for "lies in a supporting circle".
inline constexpr double kSupportTol = 1e-9;

enum class Side { Past, Future };
enum class Region { Future, Past, Omega, Boundary };

const char* to_string(Side side);
const char* to_string(Region region);

/// The open simplex {MS = (+,+,+)} (future) and its antipode (past), with an
/// optional positive diagonal map of unit determinant applied projectively.
/// Positive diagonal maps preserve coordinate signs, so both simplices are
/// the same sets for every deformation.
class AntipodalSimplexPair {
 public:
  AntipodalSimplexPair() : diag_(Vec3::Ones()) {}
  /// Entries must be positive; they are rescaled to unit determinant.
  explicit AntipodalSimplexPair(const Vec3& deformation);

  const Vec3& deformation() const { return diag_; }
  /// Pulls a point back through the inverse deformation.
  Vec3 undeform(const Vec3& v) const { return v.cwiseQuotient(diag_); }

 private:
  Vec3 diag_;
};

/// Open negative orthant (past) and open positive orthant (future) of R^3.
struct OrthantConePair {};

struct BoundaryHit {
  SpherePoint point;
  /// Bit i set when the point lies on the coordinate plane x_{i+1} = 0.
  std::uint8_t faces = 0;
  Side side = Side::Future;
  /// Angle of the point in the parametrization of the circle it was found on.
  double angle = 0.0;

  bool on_face(int axis) const { return (faces >> (axis - 1)) & 1; }
  bool is_vertex() const { return faces == 0b011 || faces == 0b101 || faces == 0b110; }
};

struct BoundaryHits {
  /// Sorted by angle along the circle.
  std::vector<BoundaryHit> hits;
  /// Set to the axis (1..3) when the circle is itself a coordinate circle,
  /// i.e. runs along a face of both simplices.
  std::optional<int> face_plane;
};

Region region_membership(const AntipodalSimplexPair& pair, const SpherePoint& p);

/// All points where circle meets the boundaries K1 (past) and K2 (future).
/// Throws NoIntersection when the circle misses the closed simplices.
BoundaryHits chord_boundary_hits(const AntipodalSimplexPair& pair, const GreatCircle& circle);

/// True when circle meets the closures of the simplices without entering
/// their interiors.
bool is_supporting_circle(const AntipodalSimplexPair& pair, const GreatCircle& circle);

/// True when the open arc ]a, b[ lies in a supporting great circle of the
/// future or past simplex.
bool in_supporting_circle(const AntipodalSimplexPair& pair, const SpherePoint& a,
                          const SpherePoint& b);

// ---------------------------------------------------------------------------
// Convex spherical bodies for the good position check.

/// Closed spherical orthant {x : sign_i x_i >= 0}.
struct SimplexBody {
  MultiSign orthant;
};

/// Closed cap of angular radius `radius` around `center`.
struct CapBody {
  SpherePoint center;
  double radius;
};

using ConvexBody = std::variant<SimplexBody, CapBody>;

/// Closed arc [start, start + length] on a circle, angles in radians.
struct Arc {
  double start = 0.0;
  double length = 0.0;
};

/// Intersection of a circle with a closed body, or nullopt when empty.
std::optional<Arc> circle_section(const ConvexBody& body, const GreatCircle& circle);

bool closures_intersect(const ConvexBody& a, const ConvexBody& b);

struct GoodPositionResult {
  bool pass = true;
  /// 0 on pass, otherwise the violated condition (1 or 2).
  int failed_condition = 0;
  /// Circle on which condition 2 fails.
  std::optional<GreatCircle> witness;
  /// Longest complementary arc on the witness circle.
  double witness_arc = 0.0;
  /// Number of sampled circles that met both bodies.
  std::size_t circles_checked = 0;
};

/// Condition 1 is checked exactly, condition 2 on `samples` random circles
/// with normals uniform on the sphere.
GoodPositionResult good_position_check(const ConvexBody& past, const ConvexBody& future,
                                       std::size_t samples, std::uint64_t seed);
GoodPositionResult good_position_check(const AntipodalSimplexPair& pair,
                                       std::size_t samples, std::uint64_t seed);

/// (w, -w) with w in the open future simplex.
std::pair<SpherePoint, SpherePoint> antipodal_witness(const AntipodalSimplexPair& pair);

/// Same for a general pair of bodies; throws PreconditionViolated when the
/// closures meet or no antipodal pair of interior points is found among the
/// natural candidates.
std::pair<SpherePoint, SpherePoint> antipodal_witness(const ConvexBody& past,
                                                      const ConvexBody& future);

}  // namespace tlh
