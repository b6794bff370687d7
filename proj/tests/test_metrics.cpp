#include "test_util.hpp"
#include "tlh/metrics.hpp"
#include "tlh/oracles.hpp"
#include "tlh/rng.hpp"
#include "tlh/sampling.hpp"

using namespace tlh;
using tlh::test::chart2m;
using tlh::test::kE;

namespace {
const AntipodalSimplexPair kPair;
const Vec3 kP = Vec3(1, -1, 1).normalized();
const Vec3 kQ = Vec3(kE, -1, kE).normalized();

LorentzEvent ev(double a, double b, double c) {
  LorentzEvent x(3);
  x << a, b, c;
  return x;
}
}  // namespace

TEST(Funk, PinnedPair) {
  const auto o = oracle::sphere_chord(kP, kQ);
  EXPECT_NEAR(funk(kPair, SpherePoint(kP), SpherePoint(kQ)), o.funk, 1e-9);
  EXPECT_NEAR(reverse_funk(kPair, SpherePoint(kP), SpherePoint(kQ)), o.reverse_funk, 1e-9);
  EXPECT_NEAR(hilbert(kPair, SpherePoint(kP), SpherePoint(kQ)), o.hilbert, 1e-9);
}

TEST(Funk, IdentityAndErrors) {
  const SpherePoint p(kP);
  EXPECT_EQ(funk(kPair, p, p), 0.0);
  EXPECT_EQ(reverse_funk(kPair, p, p), 0.0);
  EXPECT_EQ(hilbert(kPair, p, p), 0.0);
  EXPECT_ERRC(funk(kPair, chart2m(1, 1), chart2m(2, 0.5)), Errc::NotRelated);
  EXPECT_ERRC(reverse_funk(kPair, chart2m(1, 1), chart2m(2, 0.5)), Errc::NotRelated);
  EXPECT_ERRC(hilbert(kPair, chart2m(kE, kE), chart2m(1, 1)), Errc::NotRelated);
}

TEST(Hilbert, ChartExampleMatchesOracle) {
  const double want =
      oracle::sphere_chord(oracle::lift_chart2(Vec2(1, 2)), oracle::lift_chart2(Vec2(3, 4))).hilbert;
  EXPECT_NEAR(hilbert(kPair, chart2m(1, 2), chart2m(3, 4)), want, 1e-9);
}

TEST(Hilbert, AgreesWithMarchingOracleOnSamples) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng(12, i);
    const OrderedPair s = sample_before_pair(kPair, rng);
    const auto o = oracle::sphere_chord(s.p.vec(), s.q.vec());
    ASSERT_TRUE(o.related);
    EXPECT_NEAR(hilbert(kPair, s.p, s.q), o.hilbert, 1e-8);
  }
}

TEST(Hilbert, FunkIdentityOnSamples) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng(13, i);
    const OrderedPair s = sample_before_pair(kPair, rng);
    const HilbertBreakdown h = hilbert_breakdown(kPair, s.p, s.q);
    EXPECT_NEAR(h.funk + h.reverse_funk, 2 * h.hilbert, 1e-10);
    EXPECT_NEAR(h.symmetrized, h.hilbert, 1e-10);
    EXPECT_NEAR(0.5 * std::log(h.cross_ratio), h.hilbert, 1e-12);
  }
}

TEST(EuclideanHilbert, Examples) {
  const OrthantConePair cones;
  EXPECT_NEAR(euclidean_hilbert(cones, Vec3(-1, -2, 1), Vec3(1, -1, 2)),
              *oracle::euclidean_hilbert(Vec3(-1, -2, 1), Vec3(1, -1, 2)), 1e-9);
  EXPECT_NEAR(euclidean_hilbert(cones, Vec3(1, -1, 1), Vec3(kE, -1, kE)),
              *oracle::euclidean_hilbert(Vec3(1, -1, 1), Vec3(kE, -1, kE)), 1e-9);
  EXPECT_EQ(euclidean_hilbert(cones, Vec3(1, -1, 1), Vec3(1, -1, 1)), 0.0);
  EXPECT_ERRC(euclidean_hilbert(cones, Vec3(1, -1, 1), Vec3(2, -3, 1)), Errc::NotRelated);
  EXPECT_ERRC(euclidean_hilbert(cones, Vec3(1, 1, 1), Vec3(2, -3, 1)), Errc::NotInOmega);
}

TEST(ConeProjection, Examples) {
  tlh::test::expect_vec_near(cone_project(Vec3(3, 0, 3)).vec(), Vec3(1, 0, 1) / std::sqrt(2.0), 1e-15);
  tlh::test::expect_vec_near(cone_project(Vec3(-1, -2, 1)).vec(), Vec3(-1, -2, 1) / std::sqrt(6.0), 1e-15);
  EXPECT_ERRC(cone_project(Vec3(0, 0, 0)), Errc::ZeroVector);
}

TEST(ConeProjection, Isometry) {
  const OrthantConePair cones;
  Rng rng(14);
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    const Vec3 x(rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3));
    const Vec3 y(rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3));
    const SpherePoint px = cone_project(x), py = cone_project(y);
    if (region_membership(kPair, px) != Region::Omega || region_membership(kPair, py) != Region::Omega) continue;
    double he;
    try {
      he = euclidean_hilbert(cones, x, y);
    } catch (const GeometryError& e) {
      ASSERT_EQ(e.code(), Errc::NotRelated);
      continue;
    }
    ASSERT_EQ(relate(kPair, px, py), CausalRelation::Before);
    EXPECT_NEAR(he, hilbert(kPair, px, py), 1e-9);
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(Lorentz, Examples) {
  EXPECT_NEAR(lorentz_distance(ev(0, 0, 0), ev(2, 1, 1)), std::sqrt(2.0 * 2.0 - 1 - 1), 1e-15);
  EXPECT_ERRC(lorentz_distance(ev(0, 0, 0), ev(1, 1, 0)), Errc::NotRelated);
  EXPECT_ERRC(lorentz_distance(ev(0, 0, 0), ev(-1, 0, 0)), Errc::NotRelated);
  EXPECT_EQ(lorentz_distance(ev(1, 2, 3), ev(1, 2, 3)), 0.0);
}

TEST(Lorentz, TimeInequality) {
  Rng rng(15);
  for (int i = 0; i < 10000; ++i) {
    auto step = [&] {
      const double s = rng.uniform(0, 1), a = rng.uniform(0, 2 * kPi);
      const double t = s + rng.uniform(0.01, 2);
      return ev(t, s * std::cos(a), s * std::sin(a));
    };
    const LorentzEvent x = ev(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    const LorentzEvent y = x + step();
    const LorentzEvent z = y + step();
    EXPECT_GE(lorentz_distance(x, z), lorentz_distance(x, y) + lorentz_distance(y, z) - 1e-9);
  }
}

TEST(QuadrantHilbert, Examples) {
  EXPECT_NEAR(classical_hilbert_quadrant(Vec2(1, 1), Vec2(2, 2)), oracle::quadrant_hilbert(Vec2(1, 1), Vec2(2, 2)), 1e-12);
  EXPECT_NEAR(classical_hilbert_quadrant(Vec2(1, 2), Vec2(2, 1)), oracle::quadrant_hilbert(Vec2(1, 2), Vec2(2, 1)), 1e-12);
  EXPECT_EQ(classical_hilbert_quadrant(Vec2(3, 5), Vec2(3, 5)), 0.0);
  EXPECT_ERRC(classical_hilbert_quadrant(Vec2(0, 1), Vec2(1, 1)), Errc::NonPositiveInput);
  EXPECT_ERRC(classical_hilbert_quadrant_cases(Vec2(1, 1), Vec2(1, -1)), Errc::NonPositiveInput);
}

TEST(QuadrantHilbert, CasesAgreeWithMaxAndOracle) {
  Rng rng(16);
  for (int i = 0; i < 2000; ++i) {
    const Vec2 p(rng.log_uniform(0.1, 10), rng.log_uniform(0.1, 10));
    const Vec2 q(rng.log_uniform(0.1, 10), rng.log_uniform(0.1, 10));
    const double m = classical_hilbert_quadrant(p, q);
    EXPECT_NEAR(classical_hilbert_quadrant_cases(p, q), m, 1e-12);
    if (i < 200) {
      EXPECT_NEAR(m, oracle::quadrant_hilbert(p, q), 1e-9);
    }
  }
}

TEST(ChartFormula, Examples) {
  const Chart c(2, -1);
  const double w1 = oracle::sphere_chord(oracle::lift_chart2(Vec2(1, 1)), oracle::lift_chart2(Vec2(kE, kE))).hilbert;
  const double w2 = oracle::sphere_chord(oracle::lift_chart2(Vec2(1, 2)), oracle::lift_chart2(Vec2(3, 4))).hilbert;
  EXPECT_NEAR(degenerate_chart_hilbert(Vec2(1, 1), Vec2(kE, kE), c), w1, 1e-9);
  EXPECT_NEAR(degenerate_chart_hilbert(Vec2(1, 2), Vec2(3, 4), c), w2, 1e-9);
  EXPECT_EQ(degenerate_chart_hilbert(Vec2(1, 1), Vec2(1, 1), c), 0.0);
  EXPECT_ERRC(degenerate_chart_hilbert(Vec2(1, 1), Vec2(2, 0.5), c), Errc::NotRelated);
  EXPECT_ERRC(degenerate_chart_hilbert(Vec2(-1, 1), Vec2(2, 3), c), Errc::OutOfRegion);
}

TEST(ChartFormula, ScalingIsExact) {
  Rng rng(17);
  const Chart c(2, -1);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 p(rng.log_uniform(0.1, 10), rng.log_uniform(0.1, 10));
    const Vec2 q = p + Vec2(rng.uniform(0.01, 2), rng.uniform(0.01, 2));
    const Vec2 l(std::ldexp(1.0, static_cast<int>(rng.uniform(-5, 5))), std::ldexp(1.0, static_cast<int>(rng.uniform(-5, 5))));
    EXPECT_EQ(degenerate_chart_hilbert(p.cwiseProduct(l), q.cwiseProduct(l), c), degenerate_chart_hilbert(p, q, c));
  }
}
