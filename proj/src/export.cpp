#include "bhphase/export.hpp"

#include <cmath>
#include <json.hpp>

namespace bh {
namespace {

using json = nlohmann::ordered_json;

json points_json(const std::vector<DiskPoint>& pts) {
  json arr = json::array();
  for (const auto& d : pts) arr.push_back(json::array({d.X, d.Y}));
  return arr;
}

json path_json(const SeparatrixPath& s) {
  return json{{"origin", s.origin},
              {"branch", s.branch},
              {"alpha", s.alpha},
              {"omega", s.omega},
              {"points", points_json(s.points)}};
}

SeparatrixPath to_path(const Separatrix& s) {
  SeparatrixPath out{s.origin, s.branch.name(), s.alpha, s.omega, {}};
  std::vector<DiskPoint> pts;
  if (s.origin.front() == 'E') {
    pts.push_back(from_finite({s.origin == "E1" ? 1.0 : -1.0, 0.0, 0.0}));
  }
  for (const auto& pt : s.trajectory.samples) pts.push_back(from_finite(pt));
  pts.insert(pts.end(), s.far_end.continuation.begin(), s.far_end.continuation.end());
  out.points = decimate(pts);
  return out;
}

}  // namespace

std::vector<DiskPoint> decimate(const std::vector<DiskPoint>& pts, double min_gap) {
  std::vector<DiskPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const bool last = i + 1 == pts.size();
    if (out.empty() || last || std::hypot(pts[i].X - out.back().X, pts[i].Y - out.back().Y) >= min_gap) {
      out.push_back(pts[i]);
    }
  }
  return out;
}

std::vector<OrbitPath> orbit_fan(const Params& p, const IntegratorControls& base) {
  IntegratorControls ctl = base;
  ctl.max_s = 30.0;
  ctl.infinity_capture_radius = 0.0;
  ctl.escape_radius = 1e3;
  ctl.max_step = 0.05;
  std::vector<OrbitPath> out;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 4; ++j) {
      const PhasePoint seed{-2.5 + i, -1.5 + j, 0.0};
      const Trajectory back = integrate(p, seed, Direction::Backward, ctl);
      const Trajectory fwd = integrate(p, seed, Direction::Forward, ctl);
      std::vector<DiskPoint> pts;
      for (auto it = back.samples.rbegin(); it != back.samples.rend(); ++it) pts.push_back(from_finite(*it));
      for (std::size_t m = 1; m < fwd.samples.size(); ++m) pts.push_back(from_finite(fwd.samples[m]));
      out.push_back({decimate(pts)});
    }
  }
  return out;
}

PortraitDocument export_portrait(const Params& p, const TraceOptions& opt) {
  return export_portrait(classify_portrait(p, opt), opt);
}

PortraitDocument export_portrait(const PortraitResult& r, const TraceOptions& opt) {
  const Params& p = r.params;
  PortraitDocument doc{p, r.cls, r.assumes_no_limit_cycles, r.evidence_match, r.source, {}, {}, {}, {}};

  const auto marker = [](const Equilibrium& e, DiskPoint at) {
    EquilibriumMarker m{e.label, e.chart_name(), at, std::string(to_string(e.kind)), {}};
    for (Sector s : e.sectors) m.sectors.emplace_back(to_string(s));
    return m;
  };
  for (const auto& e : finite_equilibria(p)) doc.equilibria.push_back(marker(e, from_finite(*e.finite)));
  for (const auto& e : infinite_equilibria(p)) doc.equilibria.push_back(marker(e, to_disk(*e.at_infinity)));

  for (const auto& s : r.evidence) doc.separatrices.push_back(to_path(s));
  if (r.infinite_evidence) doc.separatrices.push_back(to_path(*r.infinite_evidence));
  doc.orbits = orbit_fan(p, opt.ctl);

  const bool wave = p.c() >= 2.0 || std::abs(p.c() - 2.0) < kNodeBand;
  if (wave) {
    for (const auto& s : r.evidence) {
      if (s.origin == "E1" && s.branch.name() == "U-" && s.omega == "E0") doc.highlight.push_back(to_path(s));
    }
  }
  return doc;
}

std::string to_json(const PortraitDocument& doc) {
  json j;
  j["params"] = {{"n", doc.params.n()}, {"k", doc.params.k()}, {"c", doc.params.c()}, {"m", doc.params.m()}};
  j["class"] = {{"tag", doc.cls.tag},
                {"equivalence_class", doc.cls.equivalence_class},
                {"assumes_no_limit_cycles", doc.assumes_no_limit_cycles},
                {"evidence_match", doc.evidence_match},
                {"fixture_source", std::string(to_string(doc.source))}};
  j["disk"] = {{"radius", 1.0}, {"map", "X = x / (1 + sqrt(x^2 + y^2)), Y = y / (1 + sqrt(x^2 + y^2))"}};
  json eqs = json::array();
  for (const auto& m : doc.equilibria) {
    eqs.push_back({{"label", m.label},
                   {"chart", m.chart},
                   {"at", json::array({m.at.X, m.at.Y})},
                   {"kind", m.kind},
                   {"sectors", m.sectors}});
  }
  j["equilibria"] = eqs;
  json seps = json::array();
  for (const auto& s : doc.separatrices) seps.push_back(path_json(s));
  j["separatrices"] = seps;
  json orbits = json::array();
  for (const auto& o : doc.orbits) orbits.push_back({{"points", points_json(o.points)}});
  j["orbits"] = orbits;
  json hl = json::array();
  for (const auto& s : doc.highlight) hl.push_back(path_json(s));
  j["highlight"] = hl;
  return j.dump(2) + "\n";
}

}  // namespace bh
