#include "bhphase/portrait.hpp"

#include <cmath>
#include <functional>
#include <future>

#include "bhphase/errors.hpp"

namespace bh {
namespace {

// Newton iteration for the u-nullcline of the V1 field at fixed v.
double v1_nullcline(const Params& p, double u, double v) {
  for (int it = 0; it < 50; ++it) {
    const double g = chart_field(p, {ChartId::V1, u, v}).x;
    const double h = 1e-7;
    const double dg =
        (chart_field(p, {ChartId::V1, u + h, v}).x - chart_field(p, {ChartId::V1, u - h, v}).x) / (2.0 * h);
    if (dg == 0.0) break;
    const double step = g / dg;
    u -= step;
    if (std::abs(step) < 1e-15) break;
  }
  return u;
}

Separatrix trace_branch(const Params& p, const Equilibrium& e, Branch b, const TraceOptions& opt) {
  Separatrix s;
  s.origin = e.label;
  s.branch = b;
  const Direction dir = b.stability == Stability::Unstable ? Direction::Forward : Direction::Backward;
  s.trajectory = integrate(p, seed_manifold(p, e, b, opt.seed_eps), dir, opt.ctl);
  s.far_end = limit_set(p, s.trajectory, opt.ctl);
  if (dir == Direction::Forward) {
    s.alpha = e.label;
    s.omega = s.far_end.tag();
  } else {
    s.alpha = s.far_end.tag();
    s.omega = e.label;
  }
  return s;
}

std::map<std::string, ConnectionFixture> build_fixtures() {
  std::map<std::string, ConnectionFixture> out;
  const auto add = [&out](const std::string& tag, FixtureSource src, std::map<std::string, std::string> m) {
    out[tag] = ConnectionFixture{tag, src, std::move(m)};
  };
  const auto T = FixtureSource::Text;
  const auto F = FixtureSource::Figure;
  add("I", T, {{"E1 S+", "I1"}, {"E1 S-", "I1"}, {"E1 U+", "I3^0"}, {"E1 U-", "E0"}, {"I2 U+", "I3^0"}});
  add("II", T, {{"E1 S+", "I1"}, {"E1 S-", "I2"}, {"E1 U+", "I3^0"}, {"E1 U-", "E0"}});
  const std::map<std::string, std::string> three{
      {"E1 S+", "I1"}, {"E1 S-", "I3^0"}, {"E1 U+", "I3^0"}, {"E1 U-", "E0"}, {"I2 U+", "E0"}};
  add("III.1", T, three);
  add("III.2", T, three);
  const std::map<std::string, std::string> four{{"E1 S+", "I1"}, {"E1 S-", "I1"}, {"E1 U+", "I3^e"}, {"E1 U-", "E0"}};
  add("IV.1", F, four);
  add("IV.2", F, four);
  const std::map<std::string, std::string> five{{"E1 U+", "I7"}, {"E1 U-", "E0"}, {"E1 S+", "I8"}, {"E1 S-", "I7"},
                                                {"E2 U+", "E0"}, {"E2 U-", "I8"}, {"E2 S+", "I8"}, {"E2 S-", "I7"}};
  add("V.1", F, five);
  add("V.2", F, five);
  const std::map<std::string, std::string> six{{"E1 U+", "I9^e"}, {"E1 U-", "E0"},   {"E1 S+", "I5"},
                                               {"E1 S-", "I6"},   {"E2 U+", "E0"},   {"E2 U-", "I10^e"},
                                               {"E2 S+", "I5"},   {"E2 S-", "I6"}};
  add("VI.1", F, six);
  add("VI.2", F, six);
  const std::map<std::string, std::string> seven{{"E1 U+", "I9^0"}, {"E1 U-", "E0"}, {"E1 S+", "I5"},
                                                 {"E1 S-", "I9^0"}, {"E2 U+", "E0"}, {"E2 U-", "I6"},
                                                 {"E2 S+", "I5"},   {"E2 S-", "I9^0"}};
  add("VII.1", F, seven);
  add("VII.2", F, seven);
  return out;
}

}  // namespace

std::string Branch::name() const {
  return std::string(stability == Stability::Unstable ? "U" : "S") + (side > 0 ? "+" : "-");
}

Branch Branch::parse(std::string_view s) {
  if (s.size() != 2 || (s[0] != 'U' && s[0] != 'S') || (s[1] != '+' && s[1] != '-')) {
    throw ParameterError("branch must be one of U+, U-, S+, S-; got '" + std::string(s) + "'");
  }
  return {s[0] == 'U' ? Stability::Unstable : Stability::Stable, s[1] == '+' ? 1 : -1};
}

std::string_view to_string(FixtureSource s) noexcept { return s == FixtureSource::Text ? "text" : "figure"; }

PhasePoint seed_manifold(const Params& p, const Equilibrium& e, Branch branch, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("seeding offset must be positive");
  if (branch.side != 1 && branch.side != -1) throw DomainError("branch side must be +1 or -1");
  if (!e.is_finite() || classify(p, e) != EquilibriumKind::Saddle) {
    throw PreconditionError("'" + e.label + "' is not a saddle");
  }
  const EigenData d = eigen_data(p, e);
  // Eigenvalues are ordered (negative, positive) for saddles.
  Vec2 w = (*d.vectors)[branch.stability == Stability::Stable ? 0 : 1];
  w = (1.0 / norm(w)) * w;
  if (w.x < 0.0) w = -1.0 * w;
  const Vec2 at = e.finite->xy() + (branch.side * eps) * w;
  return {at.x, at.y, 0.0};
}

IntegratorControls separatrix_controls() {
  IntegratorControls ctl;
  ctl.max_step = 0.05;
  return ctl;
}

std::vector<Separatrix> trace_separatrices(const Params& p, const TraceOptions& opt) {
  opt.ctl.validate();
  std::vector<std::function<Separatrix()>> jobs;
  for (const auto& e : finite_equilibria(p)) {
    if (e.kind != EquilibriumKind::Saddle) continue;
    for (const char* name : {"U+", "U-", "S+", "S-"}) {
      const Branch b = Branch::parse(name);
      jobs.emplace_back([&p, e, b, &opt] { return trace_branch(p, e, b, opt); });
    }
  }
  std::vector<Separatrix> out;
  if (!opt.parallel) {
    for (auto& job : jobs) out.push_back(job());
    return out;
  }
  std::vector<std::future<Separatrix>> futures;
  for (auto& job : jobs) futures.push_back(std::async(std::launch::async, job));
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

std::optional<Separatrix> trace_infinite_separatrix(const Params& p, const TraceOptions& opt) {
  if (p.n() != 1 || p.k() % 2 == 0) return std::nullopt;
  const double u_star = p.k() == 1 ? -1.0 : 0.0;
  const double v0 = opt.infinite_seed_v;
  const ChartPoint start{ChartId::V1, v1_nullcline(p, u_star, v0), v0};
  Separatrix s;
  s.origin = "I2";
  s.branch = Branch{Stability::Unstable, 1};
  s.trajectory = integrate(p, chart_to_finite(start), Direction::Forward, opt.ctl);
  s.far_end = limit_set(p, s.trajectory, opt.ctl);
  s.alpha = "I2";
  s.omega = s.far_end.tag();
  return s;
}

PortraitClass portrait_class(const Params& p) {
  const double c = p.c();
  const bool node = c >= 2.0 || std::abs(c - 2.0) < kNodeBand;
  const std::string half = node ? ".2" : ".1";
  const int k = p.k();
  if (p.n() == 1) {
    if (k % 2 == 0) return {"IV" + half, "iv"};
    if (std::abs(c - 1.0) < kNodeBand) return {"II", "ii"};
    if (c < 1.0) return {"I", "i"};
    return {"III" + half, "iii"};
  }
  if (k == 1) return {"V" + half, "v"};
  if (k % 2 == 0) return {"VI" + half, "vi"};
  return {"VII" + half, "vii"};
}

const ConnectionFixture& connection_fixture(std::string_view tag) {
  static const std::map<std::string, ConnectionFixture> fixtures = build_fixtures();
  const auto it = fixtures.find(std::string(tag));
  if (it == fixtures.end()) throw ParameterError("unknown portrait class '" + std::string(tag) + "'");
  return it->second;
}

std::string connection_key(const Separatrix& s) { return s.origin + " " + s.branch.name(); }

PortraitResult classify_portrait(const Params& p, const TraceOptions& opt) {
  PortraitResult r{p, portrait_class(p), false, {}, std::nullopt, {}, FixtureSource::Text, false};
  r.assumes_no_limit_cycles = r.cls.tag == "I";
  r.evidence = trace_separatrices(p, opt);
  r.infinite_evidence = trace_infinite_separatrix(p, opt);
  for (const auto& s : r.evidence) {
    r.observed[connection_key(s)] = s.branch.stability == Stability::Unstable ? s.omega : s.alpha;
  }
  if (r.infinite_evidence) r.observed[connection_key(*r.infinite_evidence)] = r.infinite_evidence->omega;

  const ConnectionFixture& fx = connection_fixture(r.cls.tag);
  r.source = fx.source;
  r.evidence_match = true;
  for (const auto& [key, expected] : fx.expected) {
    const auto it = r.observed.find(key);
    if (it == r.observed.end() || it->second != expected) r.evidence_match = false;
  }
  return r;
}

}  // namespace bh
