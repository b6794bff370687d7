#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tlh/causal_order.hpp"
#include "tlh/commands.hpp"
#include "tlh/golden.hpp"
#include "tlh/suites.hpp"

namespace {

using namespace tlh;

enum Exit { kOk = 0, kSuiteFail = 1, kUsage = 2, kNotRelated = 3 };

SpherePoint parse_point(const std::string& text, const std::optional<Chart>& chart) {
  if (chart) {
    const auto c = parse_tuple(text, 2);
    return lift(*chart, Vec2(c[0], c[1]));
  }
  const auto c = parse_tuple(text, 3);
  return SpherePoint(c[0], c[1], c[2]);
}

struct DistArgs {
  bool sphere = false;
  std::string chart;
  std::string p, q;
  std::string deform;
  bool strict = false;
};

int run_dist(const DistArgs& a) {
  std::optional<Chart> chart;
  if (!a.chart.empty()) chart = Chart::parse(a.chart);
  AntipodalSimplexPair pair;
  if (!a.deform.empty()) {
    const auto d = parse_tuple(a.deform, 3);
    pair = AntipodalSimplexPair(Vec3(d[0], d[1], d[2]));
  }
  const Json out = dist_report(pair, parse_point(a.p, chart), parse_point(a.q, chart));
  std::cout << dump(out) << '\n';
  if (a.strict && out["relation"] == to_string(CausalRelation::Unrelated)) {
    std::cerr << "error: NotRelated: the points are not causally related\n";
    return kNotRelated;
  }
  return kOk;
}

struct FinslerArgs {
  bool q1 = false, q2 = false;
  std::string base, vector;
};

int run_finsler(const FinslerArgs& a) {
  const auto b = parse_tuple(a.base, 2);
  const auto v = parse_tuple(a.vector, 2);
  const Quadrant q = a.q2 ? Quadrant::Q2 : Quadrant::Q1;
  std::cout << dump(finsler_report(q, Vec2(b[0], b[1]), Vec2(v[0], v[1]))) << '\n';
  return kOk;
}

struct IndicatrixArgs {
  std::string type = "q1";
  std::size_t count = 64;
  std::string format = "csv";
  std::string out;
  double extent = kIndicatrixExtent;
};

int run_indicatrix(const IndicatrixArgs& a) {
  const RegionKind kind = a.type == "q2" ? RegionKind::TypeQ2 : RegionKind::TypeQ1;
  const std::string body = a.format == "svg" ? indicatrix_svg(kind, a.count, a.extent)
                                             : indicatrix_csv(kind, a.count, a.extent);
  if (a.out.empty() || a.out == "-") {
    std::cout << body;
    return kOk;
  }
  std::ofstream f(a.out);
  if (!f) throw GeometryError(Errc::InvalidArgument, "cannot write " + a.out);
  f << body;
  return kOk;
}

struct VerifyArgs {
  std::string suite;
  std::size_t samples = 0;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  unsigned threads = 0;
  bool timing = false;
  std::string golden;
  bool regen = false;
};

std::uint64_t env_seed() {
  const char* env = std::getenv("TLH_DEFAULT_SEED");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || env[0] == '-') {
    throw GeometryError(Errc::InvalidArgument, std::string("TLH_DEFAULT_SEED is not an integer: ") + env);
  }
  return v;
}

int run_verify(const VerifyArgs& a) {
  if (!is_suite(a.suite)) throw GeometryError(Errc::InvalidArgument, "unknown suite '" + a.suite + "'");
  SuiteOptions opts;
  opts.samples = a.samples;
  opts.seed = a.seed ? *a.seed : env_seed();
  opts.tol = a.tol;
  opts.threads = a.threads;
  opts.golden_path = a.golden;
  if (a.regen) {
    if (a.suite != "golden") throw GeometryError(Errc::InvalidArgument, "--regen applies to the golden suite only");
    const std::string path = a.golden.empty() ? default_golden_path() : a.golden;
    write_golden(path, regenerate_golden());
    std::cerr << "wrote " << path << '\n';
  }
  const SuiteReport r = run_suite(a.suite, opts);
  std::cout << dump(to_json(r, a.timing)) << '\n';
  return r.pass ? kOk : kSuiteFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Timelike spherical Hilbert geometry toolkit"};
  app.require_subcommand(1);

  DistArgs dist;
  auto* d = app.add_subcommand("dist", "Order relation and distances between two points");
  auto* d_sphere = d->add_flag("--sphere", dist.sphere, "Points are x,y,z (normalized)");
  auto* d_chart = d->add_option("--chart", dist.chart, "Points are u,v in CHART (1+,1-,2+,2-,3+,3-)");
  d_sphere->excludes(d_chart);
  d->add_option("p", dist.p, "First point")->required();
  d->add_option("q", dist.q, "Second point")->required();
  d->add_option("--deform", dist.deform, "Positive diagonal a,b,c applied to the simplex pair");
  d->add_flag("--strict", dist.strict, "Exit 3 when the points are unrelated");

  FinslerArgs fin;
  auto* f = app.add_subcommand("finsler", "Minkowski functional of a chart tangent vector");
  auto* f1 = f->add_flag("--q1", fin.q1, "Base in the first quadrant");
  auto* f2 = f->add_flag("--q2", fin.q2, "Base in the second quadrant");
  f1->excludes(f2);
  f->add_option("base", fin.base, "x,y")->required();
  f->add_option("vector", fin.vector, "v1,v2")->required();

  IndicatrixArgs ind;
  auto* i = app.add_subcommand("indicatrix", "Sample the unit level set of the Log-coordinate norm");
  i->add_option("--type", ind.type, "q1 or q2")->check(CLI::IsMember({"q1", "q2"}));
  i->add_option("--count", ind.count, "Points per branch (>= 2)")->check(CLI::Range(2, 1000000));
  i->add_option("--format", ind.format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
  i->add_option("--out", ind.out, "Output file (default: standard output)");
  i->add_option("--extent", ind.extent, "Truncation of unbounded branches")->check(CLI::PositiveNumber);

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("suite", ver.suite, "Suite name")->required();
  v->add_option("--samples", ver.samples, "Sample count (default: per suite)");
  v->add_option("--seed", ver.seed, "Root seed (default: $TLH_DEFAULT_SEED or 1)");
  v->add_option("--tol", ver.tol, "Override the suite tolerance");
  v->add_option("--threads", ver.threads, "Worker threads (default: all cores)");
  v->add_flag("--timing", ver.timing, "Include wall time in the report");
  v->add_option("--golden", ver.golden, "Golden file path");
  v->add_flag("--regen", ver.regen, "Rederive the golden file from its oracles first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*d) {
      if (!dist.sphere && dist.chart.empty()) {
        throw GeometryError(Errc::InvalidArgument, "dist needs --sphere or --chart");
      }
      return run_dist(dist);
    }
    if (*f) {
      if (!fin.q1 && !fin.q2) throw GeometryError(Errc::InvalidArgument, "finsler needs --q1 or --q2");
      return run_finsler(fin);
    }
    if (*i) return run_indicatrix(ind);
    if (*v) return run_verify(ver);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
