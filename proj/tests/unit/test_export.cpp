#include <doctest.h>

#include <cmath>
#include <json.hpp>

#include "bhphase/export.hpp"

using namespace bh;

TEST_CASE("decimate keeps both ends and spacing") {
  std::vector<DiskPoint> pts;
  for (int i = 0; i <= 1000; ++i) pts.push_back({i * 1e-5, 0.0});
  const auto d = decimate(pts, 1e-3);
  CHECK(d.front().X == 0.0);
  CHECK(d.back().X == pts.back().X);
  CHECK(d.size() == 11);
  CHECK(decimate({}).empty());
}

TEST_CASE("portrait document") {
  const Params p(1, 1, 2.5);
  const PortraitDocument doc = export_portrait(p);
  CHECK(doc.cls.tag == "III.2");
  CHECK(doc.evidence_match);
  CHECK(doc.equilibria.size() == 6);
  CHECK(doc.separatrices.size() == 5);
  CHECK(doc.orbits.size() == 24);
  REQUIRE(doc.highlight.size() == 1);
  CHECK(doc.highlight[0].omega == "E0");
  const auto inside = [](const std::vector<DiskPoint>& v) {
    for (const auto& d : v) {
      if (!(std::hypot(d.X, d.Y) <= 1.0 + 1e-12)) return false;
    }
    return true;
  };
  for (const auto& s : doc.separatrices) CHECK(inside(s.points));
  for (const auto& o : doc.orbits) CHECK(inside(o.points));

  const std::string text = to_json(doc);
  CHECK(text == to_json(export_portrait(p)));
  CHECK(text.back() == '\n');
  const auto j = nlohmann::json::parse(text);
  for (const char* key : {"params", "class", "disk", "equilibria", "separatrices", "orbits", "highlight"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["class"]["tag"] == "III.2");
  CHECK(j["params"]["c"] == 2.5);
}

TEST_CASE("no highlight below the minimal wave speed") {
  const PortraitDocument doc = export_portrait(Params(2, 2, 1.5));
  CHECK(doc.highlight.empty());
  CHECK(doc.cls.tag == "VI.1");
}
