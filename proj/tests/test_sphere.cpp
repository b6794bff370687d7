#include "test_util.hpp"
#include "tlh/oracles.hpp"
#include "tlh/rng.hpp"

using namespace tlh;
using tlh::test::kE;

TEST(SphericalDistance, Examples) {
  EXPECT_NEAR(spherical_distance(SpherePoint(1, 0, 0), SpherePoint(0, 1, 0)), kPi / 2, 1e-15);
  const SpherePoint p(0.3, -0.4, 0.5);
  EXPECT_EQ(spherical_distance(p, p), 0.0);
  EXPECT_NEAR(spherical_distance(SpherePoint(1, 0, 0), SpherePoint(-1, 0, 0)), kPi, 1e-15);
}

TEST(SphericalDistance, SymmetricExactly) {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const SpherePoint p(rng.unit_vector()), q(rng.unit_vector());
    EXPECT_EQ(spherical_distance(p, q), spherical_distance(q, p));
  }
}

TEST(SpherePointTest, RejectsZero) { EXPECT_ERRC(SpherePoint(0, 0, 0), Errc::ZeroVector); }

TEST(CrossRatio, AnglesExample) {
  const GreatCircle g = GreatCircle::from_normal(Vec3(0.2, -1, 0.7));
  const double got = spherical_cross_ratio(g.point_at(0), g.point_at(kPi / 6), g.point_at(kPi / 3),
                                           g.point_at(kPi / 2), g);
  EXPECT_NEAR(got, oracle::angle_cross_ratio(0, kPi / 6, kPi / 3, kPi / 2), 1e-12);
}

TEST(CrossRatio, EqualMiddlePointsGiveOne) {
  const GreatCircle g = GreatCircle::from_normal(Vec3(1, 1, 0));
  EXPECT_NEAR(spherical_cross_ratio(g.point_at(0), g.point_at(0.4), g.point_at(0.4), g.point_at(1.2), g),
              1.0, 1e-15);
}

TEST(CrossRatio, Multiplicative) {
  const GreatCircle g = GreatCircle::from_normal(Vec3(1, 2, 3));
  auto cr = [&](double a, double b, double c, double d) {
    return spherical_cross_ratio(g.point_at(a), g.point_at(b), g.point_at(c), g.point_at(d), g);
  };
  const double lhs = cr(0, 0.3, 1.1, 1.5);
  EXPECT_NEAR(lhs, oracle::angle_cross_ratio(0, 0.3, 1.1, 1.5), 1e-12);
  EXPECT_NEAR(lhs, cr(0, 0.3, 0.7, 1.5) * cr(0, 0.7, 1.1, 1.5), 1e-10 * lhs);

  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    double t[5];
    for (double& x : t) x = rng.uniform(0, 3);
    std::sort(t, t + 5);
    const double whole = cr(t[0], t[1], t[3], t[4]);
    if (!std::isfinite(whole)) continue;
    EXPECT_NEAR(whole, cr(t[0], t[1], t[2], t[4]) * cr(t[0], t[2], t[3], t[4]), 1e-10 * whole);
  }
}

TEST(CrossRatio, ProjectiveInvariance) {
  Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    const GreatCircle g = GreatCircle::from_normal(rng.unit_vector());
    double t[4];
    for (double& x : t) x = rng.uniform(0, 3);
    std::sort(t, t + 4);
    const Vec3 d(rng.log_uniform(0.1, 10), rng.log_uniform(0.1, 10), rng.log_uniform(0.1, 10));
    SpherePoint pts[4] = {g.point_at(t[0]), g.point_at(t[1]), g.point_at(t[2]), g.point_at(t[3])};
    const double before = spherical_cross_ratio(pts[0], pts[1], pts[2], pts[3], g);
    auto img = [&](const SpherePoint& p) { return SpherePoint(d.cwiseProduct(p.vec())); };
    const SpherePoint q[4] = {img(pts[0]), img(pts[1]), img(pts[2]), img(pts[3])};
    const GreatCircle h = great_circle_through(q[0], q[3]);
    const double after = spherical_cross_ratio(q[0], q[1], q[2], q[3], h);
    if (!std::isfinite(before) || before > 1e6) continue;
    EXPECT_NEAR(after, before, 1e-9 * std::max(1.0, before));
  }
}

TEST(CrossRatio, Errors) {
  const GreatCircle g = GreatCircle::from_normal(Vec3(0, 0, 1));
  EXPECT_ERRC(spherical_cross_ratio(g.point_at(0), SpherePoint(0, 0, 1), g.point_at(1), g.point_at(2), g),
              Errc::OffCircle);
  const SpherePoint a = g.point_at(0.5);
  EXPECT_ERRC(spherical_cross_ratio(a, a, a, a, g), Errc::AllDegenerate);
}

TEST(GreatCircleThrough, Examples) {
  const GreatCircle g = great_circle_through(SpherePoint(1, 0, 0), SpherePoint(0, 1, 0));
  EXPECT_NEAR(std::abs(g.normal()[2]), 1.0, 1e-15);

  const Vec3 p = Vec3(1, -1, 1).normalized(), q = Vec3(kE, -1, kE).normalized();
  const Vec3 n = great_circle_through(SpherePoint(p), SpherePoint(q)).normal();
  const Vec3 want(p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]);
  tlh::test::expect_vec_near(n, want.normalized(), 1e-12);

  const SpherePoint r(0.2, 0.3, -0.9);
  EXPECT_ERRC(great_circle_through(r, r.antipode()), Errc::DegeneratePair);
  EXPECT_ERRC(great_circle_through(r, r), Errc::DegeneratePair);
}

TEST(Charts, ProjectExamples) {
  const ChartPoint o = project(Chart(3, 1), SpherePoint(0, 0, 1));
  EXPECT_EQ(o.coords, Vec2(0, 0));
  const Vec3 p = Vec3(1, -1, 1).normalized();
  const Vec2 c = project(Chart(2, -1), SpherePoint(p)).coords;
  EXPECT_NEAR(c[0], p[0] / -p[1], 1e-15);
  EXPECT_NEAR(c[1], p[2] / -p[1], 1e-15);
  EXPECT_ERRC(project(Chart(3, 1), SpherePoint(1, 0, 0)), Errc::OutsideHemisphere);
  EXPECT_ERRC(project(Chart(3, 1), SpherePoint(0, 0, -1)), Errc::OutsideHemisphere);
}

TEST(Charts, LiftExamples) {
  tlh::test::expect_vec_near(lift(Chart(2, -1), Vec2(1, 1)).vec(), oracle::lift_chart2(Vec2(1, 1)), 1e-15);
  tlh::test::expect_vec_near(lift(Chart(3, 1), Vec2(0, 0)).vec(), Vec3(0, 0, 1), 0);
  tlh::test::expect_vec_near(lift(Chart(1, 1), Vec2(0, 0)).vec(), Vec3(1, 0, 0), 0);
}

TEST(Charts, ParseAndName) {
  for (const Chart& c : Chart::all()) EXPECT_EQ(Chart::parse(c.name()), c);
  EXPECT_EQ(Chart::parse("2-"), Chart(2, -1));
  EXPECT_ERRC(Chart::parse("4+"), Errc::InvalidArgument);
  EXPECT_ERRC(Chart::parse("2"), Errc::InvalidArgument);
}

TEST(Charts, RoundTrips) {
  Rng rng(3);
  for (const Chart& chart : Chart::all()) {
    for (int i = 0; i < 500; ++i) {
      const Vec2 c(rng.uniform(-20, 20), rng.uniform(-20, 20));
      const Vec2 back = project(chart, lift(chart, c)).coords;
      EXPECT_LE((back - c).norm(), 1e-12 * std::max(1.0, c.norm()));

      Vec3 v = rng.unit_vector();
      if (chart.sign * v[chart.axis - 1] < 0.05) continue;
      const SpherePoint p(v);
      EXPECT_LE((lift(project(chart, p)).vec() - p.vec()).norm(), 1e-12);
    }
  }
}

TEST(MultiSignTest, Examples) {
  using S = Sign;
  EXPECT_EQ(multi_sign(SpherePoint(1, 1, 1)), MultiSign(S::Plus, S::Plus, S::Plus));
  EXPECT_EQ(multi_sign(SpherePoint(1, -1, 1)), MultiSign(S::Plus, S::Minus, S::Plus));
  EXPECT_ERRC(multi_sign(SpherePoint(1, 0, 0)), Errc::OnCoordinateCircle);
  EXPECT_ERRC(multi_sign(SpherePoint(1, 1e-13, 1)), Errc::OnCoordinateCircle);
}

TEST(MultiSignTest, CodeRoundTrip) {
  for (int code = 0; code < 8; ++code) {
    const MultiSign ms = MultiSign::from_code(code);
    EXPECT_EQ(ms.code(), code);
    EXPECT_EQ(ms.negated().code(), 7 - code);
  }
  EXPECT_EQ(MultiSign(Sign::Plus, Sign::Minus, Sign::Plus).str(), "(+,-,+)");
}
