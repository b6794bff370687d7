#include "tlh/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tlh/metrics.hpp"

namespace tlh {

Json dist_report(const AntipodalSimplexPair& pair, const SpherePoint& p, const SpherePoint& q) {
  const CausalRelation rel = relate(pair, p, q);
  Json out;
  out["relation"] = to_string(rel);
  if (rel == CausalRelation::Unrelated) return out;
  const HilbertBreakdown h = rel == CausalRelation::After ? hilbert_breakdown(pair, q, p)
                                                          : hilbert_breakdown(pair, p, q);
  out["funk"] = num(h.funk);
  out["reverse_funk"] = num(h.reverse_funk);
  out["hilbert"] = num(h.hilbert);
  return out;
}

Json finsler_report(Quadrant quadrant, const Vec2& base, const Vec2& vector) {
  const ChartTangent t{base, vector};
  const ConeClass cls = cone_classify(t, quadrant);
  const double functional = minkowski_functional(t, quadrant);
  const LogTangent lt = to_log_coords(t, quadrant);
  const double normed = normed_functional(lt.vector, kind_of(quadrant));
  if (std::abs(functional - normed) > 1e-12 * std::max(1.0, std::abs(functional))) {
    throw GeometryError(Errc::InternalMismatch, "chart and Log-coordinate functionals disagree");
  }
  Json out;
  out["class"] = to_string(cls);
  out["functional"] = num(functional);
  out["log_vector"] = num(lt.vector);
  out["normed_value"] = num(normed);
  return out;
}

std::string indicatrix_csv(RegionKind kind, std::size_t count, double extent) {
  std::ostringstream os;
  os << "v1,v2,branch\n";
  for (const auto& pt : indicatrix_sample(kind, count, extent)) {
    os << fmt15(pt.v[0]) << ',' << fmt15(pt.v[1]) << ',' << to_string(pt.branch) << '\n';
  }
  return os.str();
}

std::string indicatrix_svg(RegionKind kind, std::size_t count, double extent) {
  const auto pts = indicatrix_sample(kind, count, extent);
  double reach = 1.0;
  for (const auto& pt : pts) reach = std::max(reach, pt.v.cwiseAbs().maxCoeff());
  reach *= 1.1;
  const double size = 400.0;
  auto sx = [&](double x) { return fmt15(size / 2 + x / reach * size / 2); };
  auto sy = [&](double y) { return fmt15(size / 2 - y / reach * size / 2); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  os << "<title>indicatrix " << to_string(kind) << "</title>\n";
  // Null rays: the boundary lines of the light cone.
  const auto gen = future_generators(kind);
  for (const Vec2& g : gen) {
    const Vec2 e = g.normalized() * reach;
    os << "<line class=\"null\" x1=\"" << sx(-e[0]) << "\" y1=\"" << sy(-e[1]) << "\" x2=\""
       << sx(e[0]) << "\" y2=\"" << sy(e[1]) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (const Branch b : {Branch::Past, Branch::Future}) {
    os << "<polyline class=\"" << to_string(b) << "\" fill=\"none\" stroke=\""
       << (b == Branch::Past ? "steelblue" : "firebrick") << "\" points=\"";
    bool first = true;
    for (const auto& pt : pts) {
      if (pt.branch != b) continue;
      os << (first ? "" : " ") << sx(pt.v[0]) << ',' << sy(pt.v[1]);
      first = false;
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tlh
