#include "tlh/golden.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tlh/commands.hpp"
#include "tlh/metrics.hpp"
#include "tlh/oracles.hpp"
#include "tlh/sampling.hpp"
#include "tlh/suites.hpp"
#include "tlh/symmetry.hpp"

#ifndef TLH_GOLDEN_FILE
#define TLH_GOLDEN_FILE "data/golden.tsv"
#endif

namespace tlh {

namespace {

namespace o = tlh::oracle;
using Values = std::vector<double>;

const double kE = std::exp(1.0);
const AntipodalSimplexPair kStandard;
const Chart kChart2m(2, -1);

SpherePoint chart_point(double x, double y) { return lift(kChart2m, Vec2(x, y)); }

Values concat(std::initializer_list<Vec3> vs) {
  Values out;
  for (const Vec3& v : vs) out.insert(out.end(), v.data(), v.data() + 3);
  return out;
}

Values lex_points(std::vector<Vec3> pts) {
  for (auto& p : pts) {
    for (int i = 0; i < 3; ++i) {
      if (std::abs(p[i]) < 1e-12) p[i] = 0.0;
    }
  }
  std::sort(pts.begin(), pts.end(), [](const Vec3& a, const Vec3& b) {
    for (int i = 0; i < 3; ++i) {
      if (std::abs(a[i] - b[i]) > 1e-9) return a[i] < b[i];
    }
    return false;
  });
  Values out;
  for (const Vec3& p : pts) out.insert(out.end(), p.data(), p.data() + 3);
  return out;
}

Values hits_by_side(const Vec3& normal) {
  const BoundaryHits hits = chord_boundary_hits(kStandard, GreatCircle::from_normal(normal));
  std::vector<Vec3> fut, past;
  for (const auto& h : hits.hits) (h.side == Side::Future ? fut : past).push_back(h.point.vec());
  Values out = lex_points(fut);
  const Values p = lex_points(past);
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

Values oracle_crossings(const Vec3& normal) {
  const o::OctantCrossings c = o::octant_crossings(normal);
  Values out = lex_points(c.future);
  const Values p = lex_points(c.past);
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

double relation_code(CausalRelation r) {
  switch (r) {
    case CausalRelation::Equal: return 0;
    case CausalRelation::Before: return 1;
    case CausalRelation::After: return 2;
    case CausalRelation::Unrelated: return 3;
  }
  return -1;
}

double cone_code(ConeClass c) {
  switch (c) {
    case ConeClass::FuturePointing: return 0;
    case ConeClass::PastPointing: return 1;
    case ConeClass::Null: return 2;
    case ConeClass::Spacelike: return 3;
  }
  return -1;
}

CapBody cap(double polar, double azimuth, double radius) {
  return CapBody{SpherePoint(std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
                             std::cos(polar)),
                 radius};
}

// Longest arc left on the circle through two cap centers, compared to pi.
double cap_pair_condition(double separation, double r1, double r2) {
  if (separation <= r1 + r2) return 1;
  const double gap_near = separation - r1 - r2;
  const double gap_far = 2.0 * kPi - separation - r1 - r2;
  return std::max(gap_near, gap_far) >= kPi ? 2 : 0;
}

bool indicatrix_contains(RegionKind kind, std::size_t count, const Vec2& v) {
  const auto pts = indicatrix_sample(kind, count);
  return std::any_of(pts.begin(), pts.end(),
                     [&](const IndicatrixPoint& p) { return (p.v - v).norm() <= 1e-12; });
}

Values csv_check(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  double rows = 0, worst = 0;
  while (std::getline(in, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const Vec2 v(std::strtod(line.substr(0, c1).c_str(), nullptr),
                 std::strtod(line.substr(c1 + 1, c2 - c1 - 1).c_str(), nullptr));
    worst = std::max(worst, std::abs(normed_functional(v, RegionKind::TypeQ1) - 1.0));
    rows += 1;
  }
  return {rows, worst};
}

Values orbit_values(const GroupElement& g) {
  const OrbitReport r = orbit_check(kStandard, g, 1000, 1);
  return {r.max_deviation, r.order_ok ? 1.0 : 0.0};
}

std::vector<GoldenCase> build_cases() {
  const Vec3 pinned_p = Vec3(1, -1, 1).normalized();
  const Vec3 pinned_q = Vec3(kE, -1, kE).normalized();
  const Vec3 euclid_x(-1, -2, 1), euclid_y(1, -1, 2);
  const Vec3 ideal_x(1, -1, 1), ideal_y(kE, -1, kE);

  std::vector<GoldenCase> c;
  auto add = [&](std::string id, std::string inputs, std::string method, std::string prov,
                 std::function<Values()> oracle, std::function<Values()> impl) {
    c.push_back({std::move(id), std::move(inputs), std::move(method), std::move(prov),
                 std::move(oracle), std::move(impl)});
  };

  add("sphere.cross_ratio.angles", "angles 0,pi/6,pi/3,pi/2 on one circle",
      "sine of angle differences", "worked-example",
      [] { return Values{o::angle_cross_ratio(0, kPi / 6, kPi / 3, kPi / 2)}; },
      [] {
        const GreatCircle g = GreatCircle::from_normal(Vec3(0, 0, 1));
        return Values{spherical_cross_ratio(g.point_at(0), g.point_at(kPi / 6), g.point_at(kPi / 3),
                                            g.point_at(kPi / 2), g)};
      });
  add("sphere.cross_ratio.multiplicative", "angles a1,p,q,r,a2 = 0,0.3,0.7,1.1,1.5",
      "[a1,p,r,a2] and [a1,p,q,a2]*[a1,q,r,a2] from angle sines", "worked-example",
      [] {
        return Values{o::angle_cross_ratio(0, 0.3, 1.1, 1.5),
                      o::angle_cross_ratio(0, 0.3, 0.7, 1.5) * o::angle_cross_ratio(0, 0.7, 1.1, 1.5)};
      },
      [] {
        const GreatCircle g = GreatCircle::from_normal(Vec3(1, 2, 3));
        auto at = [&](double t) { return g.point_at(t); };
        return Values{spherical_cross_ratio(at(0), at(0.3), at(1.1), at(1.5), g),
                      spherical_cross_ratio(at(0), at(0.3), at(0.7), at(1.5), g) *
                          spherical_cross_ratio(at(0), at(0.7), at(1.1), at(1.5), g)};
      });
  add("sphere.great_circle.normal", "p=(1,-1,1)/sqrt3 q=(e,-1,e)/|.|", "cross product by components",
      "worked-example",
      [=] {
        const Vec3& a = pinned_p;
        const Vec3& b = pinned_q;
        const Vec3 n(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]);
        return concat({n / n.norm()});
      },
      [=] {
        return concat({great_circle_through(SpherePoint(pinned_p), SpherePoint(pinned_q)).normal()});
      });
  add("sphere.chart.project", "chart 2- p=(1,-1,1)/sqrt3", "scale the ray to x2=-1",
      "worked-example",
      [=] { return Values{pinned_p[0] / -pinned_p[1], pinned_p[2] / -pinned_p[1]}; },
      [=] {
        const Vec2 c = project(kChart2m, SpherePoint(pinned_p)).coords;
        return Values{c[0], c[1]};
      });
  add("sphere.chart.lift", "chart 2- (1,1)", "normalize (x,-1,y)", "worked-example",
      [] { return concat({o::lift_chart2(Vec2(1, 1))}); },
      [] { return concat({chart_point(1, 1).vec()}); });

  add("bodies.hits.normal_-1_0_1", "circle normal (-1,0,1)",
      "march the circle and bisect octant entries", "worked-example",
      [] { return oracle_crossings(Vec3(-1, 0, 1)); }, [] { return hits_by_side(Vec3(-1, 0, 1)); });
  add("bodies.hits.normal_2_-1_-1", "circle normal (2,-1,-1)",
      "march the circle and bisect octant entries", "worked-example",
      [] { return oracle_crossings(Vec3(2, -1, -1)); }, [] { return hits_by_side(Vec3(2, -1, -1)); });
  add("bodies.supporting.vertex_face", "a=(0,-1,0) b=(1,0,1)/sqrt2",
      "sampled depth of the circle inside the octant", "worked-example",
      [] { return Values{std::abs(o::circle_octant_depth(Vec3(-1, 0, 1))) <= 1e-6 ? 1.0 : 0.0}; },
      [] {
        return Values{in_supporting_circle(kStandard, SpherePoint(0, -1, 0), SpherePoint(1, 0, 1)) ? 1.0 : 0.0};
      });
  add("bodies.good_position.caps", "caps radius 0.05, centers 0.2 apart at the pole, 10000 circles seed 1",
      "arcs on the circle through both centers", "worked-example",
      [] { return Values{cap_pair_condition(0.2, 0.05, 0.05)}; },
      [] {
        return Values{static_cast<double>(
            good_position_check(cap(0.1, 0.0, 0.05), cap(0.1, kPi, 0.05), 10000, 1).failed_condition)};
      });
  add("bodies.good_position.standard", "standard pair, 10000 circles seed 1",
      "reference claim: the antipodal simplices are in good position", "reference-claim",
      [] { return Values{0.0}; },
      [] { return Values{static_cast<double>(good_position_check(kStandard, 10000, 1).failed_condition)}; });
  add("bodies.witness.deformed", "D = diag(2,1,1)/2^(1/3)", "normalize D(1,1,1)", "worked-example",
      [] {
        const Vec3 w = Vec3(2, 1, 1).normalized();
        return concat({w, -w});
      },
      [] {
        const auto [w, mw] = antipodal_witness(AntipodalSimplexPair(Vec3(2, 1, 1) / std::cbrt(2.0)));
        return concat({w.vec(), mw.vec()});
      });

  add("order.relate.diagonal", "chart 2- (1,1) vs (e,e)", "march the chord on the sphere",
      "worked-example",
      [] { return Values{static_cast<double>(o::sphere_relation(o::lift_chart2(Vec2(1, 1)), o::lift_chart2(Vec2(kE, kE))))}; },
      [] { return Values{relation_code(relate(kStandard, chart_point(1, 1), chart_point(kE, kE)))}; });
  add("order.relate.negative_slope", "chart 2- (1,1) vs (2,0.5)", "march the chord on the sphere",
      "worked-example",
      [] { return Values{static_cast<double>(o::sphere_relation(o::lift_chart2(Vec2(1, 1)), o::lift_chart2(Vec2(2, 0.5))))}; },
      [] { return Values{relation_code(relate(kStandard, chart_point(1, 1), chart_point(2, 0.5)))}; });
  add("order.chord.pinned", "p=(1,-1,1)/sqrt3 q=(e,-1,e)/|.|", "march the chord on the sphere",
      "worked-example",
      [=] {
        const auto r = o::sphere_chord(pinned_p, pinned_q);
        return concat({r.a1, r.a2});
      },
      [=] {
        const Chord ch = chord(kStandard, SpherePoint(pinned_p), SpherePoint(pinned_q));
        return concat({ch.a1.point.vec(), ch.a2.point.vec()});
      });
  add("order.chord.euclid_lift", "x=(-1,-2,1)/sqrt6 y=(1,-1,2)/sqrt6", "march the chord on the sphere",
      "worked-example",
      [=] {
        const auto r = o::sphere_chord(euclid_x, euclid_y);
        return concat({r.a1, r.a2});
      },
      [=] {
        const Chord ch = chord(kStandard, SpherePoint(euclid_x), SpherePoint(euclid_y));
        return concat({ch.a1.point.vec(), ch.a2.point.vec()});
      });

  add("metrics.funk.pinned", "p=(1,-1,1)/sqrt3 q=(e,-1,e)/|.|", "sines along the marched chord",
      "worked-example", [=] { return Values{o::sphere_chord(pinned_p, pinned_q).funk}; },
      [=] { return Values{funk(kStandard, SpherePoint(pinned_p), SpherePoint(pinned_q))}; });
  add("metrics.reverse_funk.pinned", "p=(1,-1,1)/sqrt3 q=(e,-1,e)/|.|",
      "sines along the marched chord", "worked-example",
      [=] { return Values{o::sphere_chord(pinned_p, pinned_q).reverse_funk}; },
      [=] { return Values{reverse_funk(kStandard, SpherePoint(pinned_p), SpherePoint(pinned_q))}; });
  add("metrics.hilbert.pinned", "p=(1,-1,1)/sqrt3 q=(e,-1,e)/|.|",
      "angle cross ratio along the marched chord", "worked-example",
      [=] { return Values{o::sphere_chord(pinned_p, pinned_q).hilbert}; },
      [=] { return Values{hilbert(kStandard, SpherePoint(pinned_p), SpherePoint(pinned_q))}; });
  add("metrics.hilbert.chart_1_2_3_4", "chart 2- (1,2) vs (3,4)",
      "angle cross ratio along the marched chord", "worked-example",
      [] { return Values{o::sphere_chord(o::lift_chart2(Vec2(1, 2)), o::lift_chart2(Vec2(3, 4))).hilbert}; },
      [] { return Values{hilbert(kStandard, chart_point(1, 2), chart_point(3, 4))}; });
  add("metrics.euclid.finite", "x=(-1,-2,1) y=(1,-1,2)", "march the line, Euclidean cross ratio",
      "worked-example", [=] { return Values{*o::euclidean_hilbert(euclid_x, euclid_y)}; },
      [=] { return Values{euclidean_hilbert(OrthantConePair{}, euclid_x, euclid_y)}; });
  add("metrics.euclid.ideal", "x=(1,-1,1) y=(e,-1,e)", "march the line, limiting cross ratio",
      "worked-example", [=] { return Values{*o::euclidean_hilbert(ideal_x, ideal_y)}; },
      [=] { return Values{euclidean_hilbert(OrthantConePair{}, ideal_x, ideal_y)}; });
  add("metrics.lorentz.timelike", "(0,0,0) to (2,1,1)", "direct evaluation of the form",
      "worked-example", [] { return Values{std::sqrt(2.0 * 2.0 - 1.0 - 1.0)}; },
      [] { return Values{lorentz_distance(Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(2, 1, 1))}; });
  add("metrics.quadrant.diagonal", "(1,1) vs (2,2)", "clipped line cross ratio", "worked-example",
      [] {
        const double h = o::quadrant_hilbert(Vec2(1, 1), Vec2(2, 2));
        return Values{h, h};
      },
      [] {
        return Values{classical_hilbert_quadrant(Vec2(1, 1), Vec2(2, 2)),
                      classical_hilbert_quadrant_cases(Vec2(1, 1), Vec2(2, 2))};
      });
  add("metrics.quadrant.cross", "(1,2) vs (2,1)", "clipped line cross ratio", "worked-example",
      [] {
        const double h = o::quadrant_hilbert(Vec2(1, 2), Vec2(2, 1));
        return Values{h, h};
      },
      [] {
        return Values{classical_hilbert_quadrant(Vec2(1, 2), Vec2(2, 1)),
                      classical_hilbert_quadrant_cases(Vec2(1, 2), Vec2(2, 1))};
      });
  add("metrics.chart_formula.unit_e", "chart 2- (1,1) vs (e,e)",
      "angle cross ratio along the marched chord", "worked-example",
      [] { return Values{o::sphere_chord(o::lift_chart2(Vec2(1, 1)), o::lift_chart2(Vec2(kE, kE))).hilbert}; },
      [] { return Values{degenerate_chart_hilbert(Vec2(1, 1), Vec2(kE, kE), kChart2m)}; });
  add("metrics.chart_formula.1_2_3_4", "chart 2- (1,2) vs (3,4)",
      "angle cross ratio along the marched chord", "worked-example",
      [] { return Values{o::sphere_chord(o::lift_chart2(Vec2(1, 2)), o::lift_chart2(Vec2(3, 4))).hilbert}; },
      [] { return Values{degenerate_chart_hilbert(Vec2(1, 2), Vec2(3, 4), kChart2m)}; });
  add("metrics.funk_reverse_identity", "1000 sampled pairs, seed 1",
      "property: max |F + Fbar - 2H| vanishes", "property-suite", [] { return Values{0.0}; },
      [] {
        double worst = 0.0;
        for (std::size_t i = 0; i < 1000; ++i) {
          Rng rng(1, i);
          const OrderedPair s = sample_before_pair(kStandard, rng);
          const HilbertBreakdown h = hilbert_breakdown(kStandard, s.p, s.q);
          worst = std::max(worst, std::abs(h.funk + h.reverse_funk - 2.0 * h.hilbert));
        }
        return Values{worst};
      });

  add("finsler.classify.q1_past", "Q1 base (2,1) v=(-1,-1)", "ray clipping against Q3",
      "worked-example", [] { return Values{static_cast<double>(o::ray_cone_class(Vec2(2, 1), Vec2(-1, -1)))}; },
      [] { return Values{cone_code(cone_classify({Vec2(2, 1), Vec2(-1, -1)}, Quadrant::Q1))}; });
  add("finsler.classify.q1_null", "Q1 base (2,1) v=(0,1)",
      "reference claim: axis-parallel directions are null", "reference-claim",
      [] { return Values{2.0}; },
      [] { return Values{cone_code(cone_classify({Vec2(2, 1), Vec2(0, 1)}, Quadrant::Q1))}; });
  add("finsler.classify.q2_spacelike", "Q2 base (-1,1) v=(3,-1)", "ray clipping against Q3",
      "worked-example", [] { return Values{static_cast<double>(o::ray_cone_class(Vec2(-1, 1), Vec2(3, -1)))}; },
      [] { return Values{cone_code(cone_classify({Vec2(-1, 1), Vec2(3, -1)}, Quadrant::Q2))}; });
  add("finsler.functional.q1_y_axis", "Q1 base (2,1) v=(-1,-1)", "half inverse ray length to Q3",
      "worked-example", [] { return Values{o::ray_functional(Vec2(2, 1), Vec2(-1, -1))}; },
      [] { return Values{minkowski_functional({Vec2(2, 1), Vec2(-1, -1)}, Quadrant::Q1)}; });
  add("finsler.functional.q1_x_axis", "Q1 base (2,1) v=(-1,-0.25)", "half inverse ray length to Q3",
      "worked-example", [] { return Values{o::ray_functional(Vec2(2, 1), Vec2(-1, -0.25))}; },
      [] { return Values{minkowski_functional({Vec2(2, 1), Vec2(-1, -0.25)}, Quadrant::Q1)}; });
  add("finsler.functional.q1_unit", "Q1 base (1,1) v=(1,1); derivative of H((1,1),(1+t,1+t))",
      "ray length; d/dt of log(1+t)/2 at 0", "worked-example",
      [] { return Values{o::ray_functional(Vec2(1, 1), Vec2(1, 1)), 0.5}; },
      [] {
        const double h = 2e-5;
        auto slope = [&](double t) { return hilbert(kStandard, chart_point(1, 1), chart_point(1 + t, 1 + t)) / t; };
        return Values{minkowski_functional({Vec2(1, 1), Vec2(1, 1)}, Quadrant::Q1),
                      2.0 * slope(h / 2) - slope(h)};
      });
  add("finsler.log.q1", "Q1 base (2,1) v=(-1,-1)", "divide by the base coordinates",
      "worked-example", [] { return Values{-1.0 / 2.0, -1.0 / 1.0}; },
      [] {
        const LogTangent t = to_log_coords({Vec2(2, 1), Vec2(-1, -1)}, Quadrant::Q1);
        return Values{t.vector[0], t.vector[1]};
      });
  add("finsler.normed.q1", "TypeQ1 v~=(-1,-2)", "ray functional at the unit base (1,1)",
      "worked-example", [] { return Values{o::ray_functional(Vec2(1, 1), Vec2(-1, -2))}; },
      [] { return Values{normed_functional(Vec2(-1, -2), RegionKind::TypeQ1)}; });
  add("finsler.normed.q2", "TypeQ2 v~=(1,-3)", "ray functional at the unit base (-1,1)",
      "worked-example", [] { return Values{o::ray_functional(Vec2(-1, 1), Vec2(1, -3))}; },
      [] { return Values{normed_functional(Vec2(1, -3), RegionKind::TypeQ2)}; });
  add("finsler.normed.q2_outside", "TypeQ2 v~=(3,-1)", "ray functional at the unit base (-1,1)",
      "worked-example", [] { return Values{o::ray_functional(Vec2(-1, 1), Vec2(3, -1))}; },
      [] { return Values{normed_functional(Vec2(3, -1), RegionKind::TypeQ2)}; });
  add("finsler.indicatrix.q1_corner", "TypeQ1, 13 points, corner (-2,-2)",
      "membership and ray functional of the corner", "worked-example",
      [] { return Values{1.0, o::ray_functional(Vec2(1, 1), Vec2(-2, -2))}; },
      [] {
        return Values{indicatrix_contains(RegionKind::TypeQ1, 13, Vec2(-2, -2)) ? 1.0 : 0.0,
                      normed_functional(Vec2(-2, -2), RegionKind::TypeQ1)};
      });
  add("finsler.indicatrix.q2_point", "TypeQ2, 13 points, point (1,-3)",
      "membership and ray functional of the point", "worked-example",
      [] { return Values{1.0, o::ray_functional(Vec2(-1, 1), Vec2(1, -3))}; },
      [] {
        return Values{indicatrix_contains(RegionKind::TypeQ2, 13, Vec2(1, -3)) ? 1.0 : 0.0,
                      normed_functional(Vec2(1, -3), RegionKind::TypeQ2)};
      });

  add("symmetry.apply.scale_2_3", "diag(2,3,1) on (1,-1,1)/sqrt3", "normalize the scaled vector",
      "worked-example", [] { return concat({Vec3(2, -3, 1) / std::sqrt(14.0)}); },
      [=] { return concat({apply(GroupElement::scaling(2, 3), SpherePoint(pinned_p)).vec()}); });
  add("symmetry.witness.chart", "chart 2- (1,1) to (2,3)", "componentwise ratios, third entry 1",
      "worked-example",
      [] {
        const Vec3 p = o::lift_chart2(Vec2(1, 1));
        const Vec3 q = o::lift_chart2(Vec2(2, 3));
        const Vec3 d(q[0] / p[0], q[1] / p[1], q[2] / p[2]);
        return Values{d[0] / d[2], d[1] / d[2], 0, 0};
      },
      [] {
        const GroupElement g = transitivity_witness(kStandard, chart_point(1, 1), chart_point(2, 3));
        return Values{g.scale[0], g.scale[1], static_cast<double>(g.cycle), g.flip ? 1.0 : 0.0};
      });
  add("symmetry.orbit.scale_2_5", "scale (2,5), 1000 pairs seed 1",
      "property: max deviation vanishes, order kept", "property-suite",
      [] { return Values{0.0, 1.0}; }, [] { return orbit_values(GroupElement::scaling(2, 5)); });
  add("symmetry.orbit.cycle_1", "cycle 1, 1000 pairs seed 1",
      "property: max deviation vanishes, order kept", "property-suite",
      [] { return Values{0.0, 1.0}; }, [] { return orbit_values(GroupElement::rotation(1)); });
  add("symmetry.orbit.flip", "flip, 1000 pairs seed 1",
      "property: max deviation vanishes, order reversed", "property-suite",
      [] { return Values{0.0, 1.0}; }, [] { return orbit_values(GroupElement::antipodal()); });

  add("cli.dist.chart", "dist --chart 2- 1,1 e,e", "angle cross ratio along the marched chord",
      "worked-example",
      [] { return Values{o::sphere_chord(o::lift_chart2(Vec2(1, 1)), o::lift_chart2(Vec2(kE, kE))).hilbert}; },
      [] { return Values{dist_report(kStandard, chart_point(1, 1), chart_point(kE, kE))["hilbert"].get<double>()}; });
  add("cli.finsler.q1", "finsler --q1 2,1 -1,-1", "half inverse ray length to Q3", "worked-example",
      [] { return Values{o::ray_functional(Vec2(2, 1), Vec2(-1, -1))}; },
      [] { return Values{finsler_report(Quadrant::Q1, Vec2(2, 1), Vec2(-1, -1))["functional"].get<double>()}; });
  add("cli.finsler.q2", "finsler --q2 -1,1 1,-3", "ray functional at the base", "worked-example",
      [] { return Values{o::ray_functional(Vec2(-1, 1), Vec2(1, -3))}; },
      [] { return Values{finsler_report(Quadrant::Q2, Vec2(-1, 1), Vec2(1, -3))["normed_value"].get<double>()}; });
  add("cli.indicatrix.q1_64", "indicatrix --type q1 --count 64 --format csv",
      "row count 2*count; worst |p~ - 1| vanishes", "worked-example",
      [] { return Values{128.0, 0.0}; },
      [] { return csv_check(indicatrix_csv(RegionKind::TypeQ1, 64)); });
  add("cli.verify.phi_isometry", "verify phi-isometry --samples 10000 --seed 7",
      "property: max deviation vanishes, suite passes", "property-suite",
      [] { return Values{0.0, 1.0}; },
      [] {
        SuiteOptions opts;
        opts.samples = 10000;
        opts.seed = 7;
        const SuiteReport r = run_suite("phi-isometry", opts);
        return Values{r.max_deviation, r.pass ? 1.0 : 0.0};
      });
  return c;
}

std::string join_values(const Values& v) {
  std::string out;
  char buf[40];
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", v[i]);
    if (i) out += ',';
    out += buf;
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = build_cases();
  return cases;
}

std::string default_golden_path() {
  if (const char* env = std::getenv("TLH_GOLDEN_FILE"); env && *env) return env;
  return TLH_GOLDEN_FILE;
}

std::vector<GoldenRecord> load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GeometryError(Errc::InvalidArgument, "cannot open golden file " + path);
  std::vector<GoldenRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto f = split(line, '\t');
    if (f.size() != 5) {
      throw GeometryError(Errc::InvalidArgument,
                          path + ":" + std::to_string(lineno) + ": expected 5 tab-separated fields");
    }
    GoldenRecord r{f[0], f[1], {}, f[3], f[4]};
    for (const auto& v : split(f[2], ',')) {
      char* end = nullptr;
      r.value.push_back(std::strtod(v.c_str(), &end));
      if (end == v.c_str() || *end != '\0') {
        throw GeometryError(Errc::InvalidArgument,
                            path + ":" + std::to_string(lineno) + ": bad value '" + v + "'");
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

void write_golden(const std::string& path, const std::vector<GoldenRecord>& records) {
  std::ofstream out(path);
  if (!out) throw GeometryError(Errc::InvalidArgument, "cannot write golden file " + path);
  out << "# id\tinputs\tvalue\tmethod\tprovenance\n";
  out << "# Regenerate with: tlh verify golden --regen\n";
  for (const auto& r : records) {
    out << r.id << '\t' << r.inputs << '\t' << join_values(r.value) << '\t' << r.method << '\t'
        << r.provenance << '\n';
  }
}

std::vector<GoldenRecord> regenerate_golden() {
  const auto& cases = golden_cases();
  std::vector<GoldenRecord> out(cases.size());
  parallel_for(cases.size(), 0, [&](std::size_t i) {
    const GoldenCase& c = cases[i];
    out[i] = GoldenRecord{c.id, c.inputs, c.oracle(), c.method, c.provenance};
  });
  return out;
}

}  // namespace tlh
