#include "tlh/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

#include "tlh/golden.hpp"
#include "tlh/metrics.hpp"
#include "tlh/sampling.hpp"

namespace tlh {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SampleResult {
  double deviation = 0.0;
  Json witness = Json::object();
  std::vector<double> parts;  ///< per-suite auxiliary values
  std::string tag;            ///< counted in the details
};

using SampleFn = std::function<SampleResult(std::size_t, Rng&)>;

Json point_json(const SpherePoint& p) { return num(p.vec()); }

Json chain_json(const Chain& c) {
  return Json{{"p", point_json(c.p)}, {"q", point_json(c.q)}, {"r", point_json(c.r)}};
}

Json pair_json(const OrderedPair& s) {
  return Json{{"p", point_json(s.p)}, {"q", point_json(s.q)}};
}

// Runs f on every sample and folds the results in index order.
void run_samples(SuiteReport& report, const SuiteOptions& opts,
                 const std::vector<std::string>& part_names, const SampleFn& f) {
  std::vector<SampleResult> results(report.samples);
  parallel_for(report.samples, opts.threads, [&](std::size_t i) {
    Rng rng(report.seed, i);
    try {
      results[i] = f(i, rng);
    } catch (const GeometryError& e) {
      results[i].deviation = kInf;
      results[i].witness = Json{{"error", e.what()}};
    }
  });

  std::vector<double> lo(part_names.size(), kInf), hi(part_names.size(), -kInf);
  std::map<std::string, std::size_t> tags;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const SampleResult& r = results[i];
    const double dev = std::isnan(r.deviation) ? kInf : r.deviation;
    report.max_deviation = std::max(report.max_deviation, dev);
    if (dev > report.tolerance && report.counterexample.is_null()) {
      report.counterexample = Json{{"index", i}, {"deviation", num(dev)}};
      for (const auto& [k, v] : r.witness.items()) report.counterexample[k] = v;
    }
    for (std::size_t k = 0; k < r.parts.size() && k < part_names.size(); ++k) {
      lo[k] = std::min(lo[k], r.parts[k]);
      hi[k] = std::max(hi[k], r.parts[k]);
    }
    if (!r.tag.empty()) ++tags[r.tag];
  }
  for (std::size_t k = 0; k < part_names.size(); ++k) {
    report.details[part_names[k]] = Json{{"min", num(lo[k])}, {"max", num(hi[k])}};
  }
  for (const auto& [k, v] : tags) report.details["count_" + k] = v;
}

double reverse_gap(double whole, double a, double b) { return std::max(0.0, a + b - whole); }

Vec3 future_timelike(Rng& rng) {
  const double tau = rng.uniform(0.1, 1.0);
  const double rho = rng.uniform(0.0, 0.9) * tau;
  const double theta = rng.uniform(0.0, kTwoPi);
  return Vec3(tau, rho * std::cos(theta), rho * std::sin(theta));
}

const AntipodalSimplexPair kPair;

void suite_time_inequality(SuiteReport& report, const SuiteOptions& opts) {
  run_samples(report, opts, {"hilbert_gap", "funk_gap", "lorentz_gap"}, [](std::size_t, Rng& rng) {
    const Chain c = sample_chain(kPair, rng, false);
    const HilbertBreakdown pq = hilbert_breakdown(kPair, c.p, c.q);
    const HilbertBreakdown qr = hilbert_breakdown(kPair, c.q, c.r);
    const HilbertBreakdown pr = hilbert_breakdown(kPair, c.p, c.r);
    const double dh = reverse_gap(pr.hilbert, pq.hilbert, qr.hilbert);
    const double df = reverse_gap(pr.funk, pq.funk, qr.funk);

    const Vec3 x(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const Vec3 y = x + future_timelike(rng);
    const Vec3 z = y + future_timelike(rng);
    const double dl = reverse_gap(lorentz_distance(x, z), lorentz_distance(x, y), lorentz_distance(y, z));

    SampleResult r;
    r.deviation = std::max({dh, df, dl});
    r.witness = chain_json(c);
    r.witness["events"] = Json::array({num(x), num(y), num(z)});
    r.parts = {dh, df, dl};
    return r;
  });
}

void suite_additivity(SuiteReport& report, const SuiteOptions& opts) {
  run_samples(report, opts, {}, [](std::size_t, Rng& rng) {
    const Chain c = sample_chain(kPair, rng, true);
    const double sum = hilbert(kPair, c.p, c.q) + hilbert(kPair, c.q, c.r);
    SampleResult r;
    r.deviation = std::abs(hilbert(kPair, c.p, c.r) - sum);
    r.witness = chain_json(c);
    return r;
  });
}

void suite_phi_isometry(SuiteReport& report, const SuiteOptions& opts) {
  static const char* kModes[] = {"radial", "ideal_a2", "ideal_a1"};
  const OrthantConePair cones;
  run_samples(report, opts, {}, [&](std::size_t i, Rng& rng) {
    const int mode = static_cast<int>(i % 3);
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const OrderedPair s = sample_before_pair(kPair, rng);
      const double alpha = rng.log_uniform(0.2, 5.0);
      const double beta = rng.log_uniform(0.2, 5.0);
      const Vec3 x = alpha * s.p.vec();
      Vec3 y;
      if (mode == 0) {
        y = beta * s.q.vec();
      } else {
        const Chord c = chord(kPair, s.p, s.q);
        y = mode == 1 ? Vec3(x + beta * c.a2.point.vec()) : Vec3(x - beta * c.a1.point.vec());
      }
      double he;
      try {
        he = euclidean_hilbert(cones, x, y);
      } catch (const GeometryError& e) {
        if (e.code() == Errc::NotRelated || e.code() == Errc::NotInOmega) continue;
        throw;
      }
      SampleResult r;
      r.deviation = std::abs(he - hilbert(kPair, cone_project(x), cone_project(y)));
      r.witness = Json{{"mode", kModes[mode]}, {"x", num(x)}, {"y", num(y)}};
      r.tag = kModes[mode];
      return r;
    }
    throw GeometryError(Errc::PreconditionViolated, "no Euclidean-related pair found");
  });
}

void suite_projective_invariance(SuiteReport& report, const SuiteOptions& opts) {
  run_samples(report, opts, {}, [](std::size_t, Rng& rng) {
    const OrderedPair s = sample_before_pair(kPair, rng);
    const Vec3 d(rng.log_uniform(0.1, 10.0), rng.log_uniform(0.1, 10.0), rng.log_uniform(0.1, 10.0));
    const SpherePoint dp(d.cwiseProduct(s.p.vec()));
    const SpherePoint dq(d.cwiseProduct(s.q.vec()));
    SampleResult r;
    r.deviation = std::abs(hilbert(kPair, s.p, s.q) - hilbert(kPair, dp, dq));
    r.witness = pair_json(s);
    r.witness["diagonal"] = num(d);
    return r;
  });
}

std::vector<GroupElement> orbit_elements() {
  return {GroupElement::scaling(2.0, 5.0), GroupElement::rotation(1), GroupElement::rotation(2),
          GroupElement::antipodal(), GroupElement{Vec2(0.3, 4.0), 2, true}};
}

Json element_json(const GroupElement& g) {
  return Json{{"scale", num(g.scale)}, {"cycle", g.cycle}, {"flip", g.flip}};
}

// Each of the six scale-free elements maps every region to a distinct region,
// and for each ordered pair of regions exactly one element does so.
bool regions_simply_transitive() {
  const auto regions = RegionId::all();
  for (const RegionId& from : regions) {
    for (const RegionId& to : regions) {
      int hits = 0;
      for (const bool f : {false, true}) {
        for (int k = 0; k < 3; ++k) {
          if (apply(GroupElement{Vec2::Ones(), k, f}, from.ms) == to.ms) ++hits;
        }
      }
      if (hits != 1) return false;
    }
  }
  return true;
}

void suite_group_orbit(SuiteReport& report, const SuiteOptions& opts) {
  const auto elements = orbit_elements();
  run_samples(report, opts, {}, [&](std::size_t i, Rng& rng) {
    const GroupElement& g = elements[i % elements.size()];
    const OrderedPair s = sample_before_pair(kPair, rng);
    SpherePoint a = apply(g, s.p);
    SpherePoint b = apply(g, s.q);
    if (!g.preserves_order()) std::swap(a, b);
    SampleResult r;
    r.witness = pair_json(s);
    r.witness["element"] = element_json(g);
    if (relate(kPair, a, b) != CausalRelation::Before) {
      r.deviation = kInf;
      r.witness["error"] = "image pair has the wrong order";
      return r;
    }
    r.deviation = std::abs(hilbert(kPair, a, b) - hilbert(kPair, s.p, s.q));
    return r;
  });
  const bool simple = regions_simply_transitive();
  report.details["regions_simply_transitive"] = simple;
  if (!simple) {
    report.max_deviation = kInf;
    if (report.counterexample.is_null()) {
      report.counterexample = Json{{"error", "scale-free elements do not act simply transitively"}};
    }
  }
}

void suite_linearization(SuiteReport& report, const SuiteOptions& opts) {
  run_samples(report, opts, {"ratio_1e-3", "ratio_1e-4"}, [](std::size_t, Rng& rng) {
    const SpherePoint p = sample_omega(rng);
    const FutureTangent t = sample_future_tangent(kPair, p, rng);
    const double pf = minkowski_functional({t.base, t.vector}, t.region.quadrant());
    double err[3];
    const double steps[3] = {1e-2, 1e-3, 1e-4};
    for (int k = 0; k < 3; ++k) {
      const SpherePoint q = t.region.from_planar(t.base + steps[k] * t.vector);
      err[k] = std::abs(hilbert(kPair, p, q) / steps[k] - pf);
    }
    const double r1 = err[1] / err[0];
    const double r2 = err[2] / err[1];
    auto in_band = [](double r) { return r >= 0.05 && r <= 0.2; };
    SampleResult r;
    r.deviation = (in_band(r1) ? 0.0 : 1.0) + (in_band(r2) ? 0.0 : 1.0);
    r.parts = {r1, r2};
    r.witness = Json{{"p", point_json(p)},
                     {"region", t.region.ms.str()},
                     {"base", num(t.base)},
                     {"vector", num(t.vector)},
                     {"functional", num(pf)},
                     {"errors", Json::array({num(err[0]), num(err[1]), num(err[2])})}};
    return r;
  });
}

void suite_eq_consistency(SuiteReport& report, const SuiteOptions& opts) {
  run_samples(report, opts, {}, [](std::size_t, Rng& rng) {
    const OrderedPair s = sample_before_pair(kPair, rng);
    const HilbertBreakdown h = hilbert_breakdown(kPair, s.p, s.q);
    SampleResult r;
    r.deviation = std::abs(h.symmetrized - h.hilbert);
    r.witness = pair_json(s);
    return r;
  });
}

CapBody cap(double polar, double azimuth, double radius) {
  return CapBody{SpherePoint(std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
                             std::cos(polar)),
                 radius};
}

void suite_good_position(SuiteReport& report, const SuiteOptions&) {
  const GoodPositionResult standard = good_position_check(kPair, report.samples, report.seed);
  const ConvexBody a = cap(0.1, 0.0, 0.05);
  const ConvexBody b = cap(0.1, kPi, 0.05);
  const GoodPositionResult caps = good_position_check(a, b, report.samples, report.seed);

  const bool ok_standard = standard.pass;
  const bool ok_caps = !caps.pass && caps.failed_condition == 2 && caps.witness.has_value();
  report.details["standard_pass"] = standard.pass;
  report.details["standard_circles"] = standard.circles_checked;
  report.details["caps_pass"] = caps.pass;
  report.details["caps_failed_condition"] = caps.failed_condition;
  if (caps.witness) {
    report.details["caps_witness_normal"] = num(caps.witness->normal());
    report.details["caps_witness_arc"] = num(caps.witness_arc);
  }
  report.max_deviation = (ok_standard ? 0.0 : 1.0) + (ok_caps ? 0.0 : 1.0);
  if (!ok_standard) report.counterexample = Json{{"error", "standard pair failed"}};
  else if (!ok_caps) report.counterexample = Json{{"error", "cap pair was not rejected at condition 2"}};
}

void suite_golden(SuiteReport& report, const SuiteOptions& opts) {
  const std::string path = opts.golden_path.empty() ? default_golden_path() : opts.golden_path;
  const auto records = load_golden(path);
  std::map<std::string, const GoldenCase*> cases;
  for (const auto& c : golden_cases()) cases[c.id] = &c;

  std::vector<double> devs(records.size(), 0.0);
  std::vector<Json> notes(records.size());
  parallel_for(records.size(), opts.threads, [&](std::size_t i) {
    const GoldenRecord& rec = records[i];
    const auto it = cases.find(rec.id);
    if (it == cases.end()) {
      devs[i] = kInf;
      notes[i] = Json{{"id", rec.id}, {"error", "no implementation registered"}};
      return;
    }
    try {
      const std::vector<double> got = it->second->implementation();
      if (got.size() != rec.value.size()) {
        devs[i] = kInf;
      } else {
        for (std::size_t k = 0; k < got.size(); ++k) {
          devs[i] = std::max(devs[i], std::abs(got[k] - rec.value[k]));
          if (std::isnan(got[k])) devs[i] = kInf;
        }
      }
      Json vals = Json::array();
      for (double v : got) vals.push_back(num(v));
      notes[i] = Json{{"id", rec.id}, {"got", vals}};
    } catch (const GeometryError& e) {
      devs[i] = kInf;
      notes[i] = Json{{"id", rec.id}, {"error", e.what()}};
    }
  });

  std::size_t missing = 0;
  for (const auto& c : golden_cases()) {
    const bool present = std::any_of(records.begin(), records.end(),
                                     [&](const GoldenRecord& r) { return r.id == c.id; });
    if (!present) {
      ++missing;
      if (report.counterexample.is_null()) {
        report.counterexample = Json{{"id", c.id}, {"error", "record missing from golden file"}};
      }
    }
  }
  report.samples = records.size();
  for (std::size_t i = 0; i < records.size(); ++i) {
    report.max_deviation = std::max(report.max_deviation, devs[i]);
    if (devs[i] > report.tolerance && report.counterexample.is_null()) {
      report.counterexample = notes[i];
      report.counterexample["deviation"] = num(devs[i]);
    }
  }
  report.details["records"] = records.size();
  report.details["missing"] = missing;
  if (missing > 0) report.max_deviation = kInf;
}

using SuiteFn = void (*)(SuiteReport&, const SuiteOptions&);

struct SuiteEntry {
  const char* name;
  SuiteFn run;
  std::size_t samples;
  double tol;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries = {
      {"time-inequality", suite_time_inequality, 10000, 1e-9},
      {"additivity", suite_additivity, 10000, 1e-9},
      {"phi-isometry", suite_phi_isometry, 10000, 1e-9},
      {"projective-invariance", suite_projective_invariance, 10000, 1e-9},
      {"group-orbit", suite_group_orbit, 10000, 1e-9},
      {"linearization", suite_linearization, 1000, 0.0},
      {"eq-consistency", suite_eq_consistency, 10000, 1e-10},
      {"good-position", suite_good_position, 10000, 0.0},
      {"golden", suite_golden, 0, kGoldenTol},
  };
  return entries;
}

const SuiteEntry* find_suite(const std::string& name) {
  for (const auto& s : registry()) {
    if (name == s.name) return &s;
  }
  return nullptr;
}

}  // namespace

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& f) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) f(i);
    });
  }
  for (auto& th : pool) th.join();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : registry()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) { return find_suite(name) != nullptr; }

std::size_t default_samples(const std::string& name) {
  const SuiteEntry* s = find_suite(name);
  return s ? s->samples : 0;
}

double default_tolerance(const std::string& name) {
  const SuiteEntry* s = find_suite(name);
  return s ? s->tol : 0.0;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  const SuiteEntry* entry = find_suite(name);
  if (!entry) throw GeometryError(Errc::InvalidArgument, "unknown suite '" + name + "'");
  SuiteReport report;
  report.suite = name;
  report.seed = options.seed;
  report.samples = options.samples ? options.samples : entry->samples;
  report.tolerance = options.tol.value_or(entry->tol);

  const auto start = std::chrono::steady_clock::now();
  entry->run(report, options);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.pass = report.max_deviation <= report.tolerance;
  return report;
}

Json to_json(const SuiteReport& r, bool timing) {
  Json j;
  j["suite"] = r.suite;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["max_deviation"] = num(r.max_deviation);
  j["tolerance"] = num(r.tolerance);
  j["pass"] = r.pass;
  j["details"] = r.details;
  if (!r.counterexample.is_null()) j["counterexample"] = r.counterexample;
  if (timing) j["wall_seconds"] = num(r.wall_seconds);
  return j;
}

}  // namespace tlh
