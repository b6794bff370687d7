#include <fstream>

#include "test_util.hpp"
#include "tlh/golden.hpp"
#include "tlh/report.hpp"
#include "tlh/rng.hpp"
#include "tlh/suites.hpp"

using namespace tlh;

TEST(RngTest, StreamsAreReproducibleAndDistinct) {
  Rng a(7, 3), b(7, 3), c(7, 4), d(8, 3);
  const auto x = a.bits();
  EXPECT_EQ(x, b.bits());
  EXPECT_NE(x, c.bits());
  EXPECT_NE(x, d.bits());
  Rng u(1);
  for (int i = 0; i < 1000; ++i) {
    const double v = u.uniform();
    EXPECT_GE(v, 0.0);
    EXPECT_LT(v, 1.0);
    EXPECT_NEAR(u.unit_vector().norm(), 1.0, 1e-15);
  }
}

TEST(Report, NumbersUseFifteenDigits) {
  EXPECT_EQ(fmt15(0.1 + 0.2), "0.3");
  EXPECT_EQ(dump(num(1.0 / 3.0)), "0.333333333333333");
  EXPECT_TRUE(num(std::nan("")).is_null());
  EXPECT_EQ(dump(num(Vec2(0.5, -2))), "[0.5,-2.0]");
}

TEST(Report, ParseNumbers) {
  EXPECT_EQ(parse_number("e"), std::exp(1.0));
  EXPECT_EQ(parse_number("-e"), -std::exp(1.0));
  EXPECT_EQ(parse_number("pi"), kPi);
  EXPECT_EQ(parse_number("-0.25"), -0.25);
  EXPECT_EQ(parse_number("1e-3"), 1e-3);
  EXPECT_ERRC(parse_number("abc"), Errc::InvalidArgument);
  EXPECT_ERRC(parse_number("--1"), Errc::InvalidArgument);
  EXPECT_ERRC(parse_number("inf"), Errc::InvalidArgument);
  EXPECT_EQ(parse_tuple("1,-e,3", 3), (std::vector<double>{1, -std::exp(1.0), 3}));
  EXPECT_ERRC(parse_tuple("1,2", 3), Errc::InvalidArgument);
  EXPECT_ERRC(parse_tuple("1,,2", 3), Errc::InvalidArgument);
}

TEST(Suites, Registry) {
  EXPECT_EQ(suite_names().size(), 9u);
  for (const auto& s : suite_names()) EXPECT_TRUE(is_suite(s));
  EXPECT_FALSE(is_suite("no-such-suite"));
  EXPECT_ERRC(run_suite("no-such-suite", {}), Errc::InvalidArgument);
}

TEST(Suites, DeterministicAcrossRunsAndThreads) {
  for (const std::string name : {"time-inequality", "phi-isometry", "linearization"}) {
    SuiteOptions o;
    o.samples = 500;
    o.seed = 9;
    o.threads = 1;
    const std::string serial = dump(to_json(run_suite(name, o), false));
    o.threads = 4;
    EXPECT_EQ(dump(to_json(run_suite(name, o), false)), serial) << name;
    EXPECT_EQ(dump(to_json(run_suite(name, o), false)), serial) << name;
  }
}

TEST(Suites, PassMatchesTolerance) {
  SuiteOptions o;
  o.samples = 200;
  o.tol = 0.0;
  const SuiteReport strict = run_suite("eq-consistency", o);
  EXPECT_EQ(strict.pass, strict.max_deviation <= 0.0);
  if (!strict.pass) {
    EXPECT_FALSE(strict.counterexample.is_null());
  }
  o.tol = 1e-10;
  const SuiteReport normal = run_suite("eq-consistency", o);
  EXPECT_TRUE(normal.pass);
  EXPECT_TRUE(normal.counterexample.is_null());
}

TEST(Suites, TimingIsOptIn) {
  SuiteOptions o;
  o.samples = 10;
  const SuiteReport r = run_suite("additivity", o);
  EXPECT_FALSE(to_json(r, false).contains("wall_seconds"));
  EXPECT_TRUE(to_json(r, true).contains("wall_seconds"));
}

TEST(Golden, FileCoversEveryCase) {
  const auto records = load_golden(default_golden_path());
  ASSERT_EQ(records.size(), golden_cases().size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(records[i].id, golden_cases()[i].id);
    EXPECT_FALSE(records[i].method.empty());
    EXPECT_FALSE(records[i].provenance.empty());
  }
}

TEST(Golden, ImplementationReproducesOracle) {
  for (const GoldenCase& c : golden_cases()) {
    const auto want = c.oracle();
    const auto got = c.implementation();
    ASSERT_EQ(got.size(), want.size()) << c.id;
    for (std::size_t k = 0; k < want.size(); ++k) EXPECT_NEAR(got[k], want[k], kGoldenTol) << c.id << "[" << k << "]";
  }
}

TEST(Golden, RoundTripThroughFile) {
  const std::string path = ::testing::TempDir() + "/golden_roundtrip.tsv";
  const auto records = regenerate_golden();
  write_golden(path, records);
  const auto back = load_golden(path);
  ASSERT_EQ(back.size(), records.size());
  for (std::size_t i = 0; i < back.size(); ++i) EXPECT_EQ(back[i].value, records[i].value) << back[i].id;

  std::ofstream(path) << "bad\tline\n";
  EXPECT_ERRC(load_golden(path), Errc::InvalidArgument);
  EXPECT_ERRC(load_golden(path + ".missing"), Errc::InvalidArgument);
}

TEST(Golden, SuiteReportsMissingRecords) {
  const std::string path = ::testing::TempDir() + "/golden_partial.tsv";
  auto records = regenerate_golden();
  records.pop_back();
  write_golden(path, records);
  SuiteOptions o;
  o.golden_path = path;
  const SuiteReport r = run_suite("golden", o);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.details["missing"], 1);
}
