#include "svg.hpp"

#include <cstdio>
#include <sstream>

namespace bhcli {
namespace {

constexpr double kCanvas = 800.0;
constexpr double kCenter = 400.0;
constexpr double kRadius = 360.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

double px(const bh::DiskPoint& d) { return kCenter + kRadius * d.X; }
double py(const bh::DiskPoint& d) { return kCenter - kRadius * d.Y; }

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

void polyline(std::ostringstream& os, const std::vector<bh::DiskPoint>& pts, const std::string& cls) {
  if (pts.size() < 2) return;
  os << "  <polyline class=\"" << cls << "\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << num(px(pts[i])) << "," << num(py(pts[i]));
  os << "\"/>\n";
}

void marker(std::ostringstream& os, const bh::EquilibriumMarker& m) {
  const double x = px(m.at);
  const double y = py(m.at);
  if (m.kind == "saddle") {
    os << "  <rect class=\"saddle\" x=\"" << num(x - 5) << "\" y=\"" << num(y - 5) << "\" width=\"10\" height=\"10\"/>\n";
  } else if (m.kind == "stable-node" || m.kind == "stable-focus") {
    os << "  <circle class=\"sink\" cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"5\"/>\n";
  } else if (m.kind == "unstable-node") {
    os << "  <circle class=\"source\" cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"5\"/>\n";
  } else {
    os << "  <polygon class=\"degenerate\" points=\"" << num(x) << "," << num(y - 6) << " " << num(x + 6) << "," << num(y)
       << " " << num(x) << "," << num(y + 6) << " " << num(x - 6) << "," << num(y) << "\"/>\n";
  }
  const double dx = m.at.X >= 0.0 ? 8.0 : -8.0;
  os << "  <text x=\"" << num(x + dx) << "\" y=\"" << num(y - 8) << "\" text-anchor=\"" << (dx > 0 ? "start" : "end")
     << "\">" << escape(m.label) << "</text>\n";
}

}  // namespace

std::string render_svg(const bh::PortraitDocument& doc) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n"
     << "  <style>\n"
     << "    .orbit { fill: none; stroke: #b0b0b0; stroke-width: 0.8; }\n"
     << "    .sep-unstable { fill: none; stroke: #c0392b; stroke-width: 1.6; }\n"
     << "    .sep-stable { fill: none; stroke: #2160b0; stroke-width: 1.6; stroke-dasharray: 6 3; }\n"
     << "    .highlight { fill: none; stroke: #e69f00; stroke-width: 4; stroke-opacity: 0.8; }\n"
     << "    .sink { fill: #000; }\n"
     << "    .source { fill: #fff; stroke: #000; stroke-width: 1.5; }\n"
     << "    .saddle { fill: #fff; stroke: #000; stroke-width: 1.5; }\n"
     << "    .degenerate { fill: #777; stroke: #000; stroke-width: 1; }\n"
     << "    text { font-family: sans-serif; font-size: 12px; }\n"
     << "  </style>\n"
     << "  <rect width=\"" << num(kCanvas) << "\" height=\"" << num(kCanvas) << "\" fill=\"#fff\"/>\n";

  char title[160];
  std::snprintf(title, sizeof title, "n=%d k=%d c=%.17g  class %s", doc.params.n(), doc.params.k(), doc.params.c(),
                doc.cls.tag.c_str());
  os << "  <text x=\"20\" y=\"24\" font-size=\"16\">" << escape(title) << "</text>\n";
  if (doc.assumes_no_limit_cycles) {
    os << "  <text x=\"20\" y=\"42\">assumes no limit cycles</text>\n";
  }

  os << "  <circle cx=\"" << num(kCenter) << "\" cy=\"" << num(kCenter) << "\" r=\"" << num(kRadius)
     << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";

  os << "  <g id=\"orbits\">\n";
  for (const auto& o : doc.orbits) polyline(os, o.points, "orbit");
  os << "  </g>\n  <g id=\"highlight\">\n";
  for (const auto& s : doc.highlight) polyline(os, s.points, "highlight");
  os << "  </g>\n  <g id=\"separatrices\">\n";
  for (const auto& s : doc.separatrices) {
    polyline(os, s.points, s.branch.front() == 'U' ? "sep-unstable" : "sep-stable");
  }
  os << "  </g>\n  <g id=\"equilibria\">\n";
  for (const auto& m : doc.equilibria) marker(os, m);
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace bhcli
