#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <json.hpp>
#include <set>
#include <sstream>

#include "bhphase/blowup.hpp"
#include "bhphase/compact.hpp"
#include "bhphase/equilibria.hpp"
#include "bhphase/errors.hpp"
#include "bhphase/export.hpp"
#include "bhphase/pde.hpp"
#include "bhphase/portrait.hpp"
#include "bhphase/wave.hpp"
#include "svg.hpp"

namespace bhcli {
namespace {

using json = nlohmann::ordered_json;

const std::set<std::string> kCommands{"analyze", "portrait", "wave", "pde-check", "sweep"};

bh::Params params_of(const RunConfig& cfg) { return bh::Params(cfg.n, cfg.k, cfg.c, cfg.m); }

std::string stem(const RunConfig& cfg) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s-n%d-k%d-c%g", cfg.command.c_str(), cfg.n, cfg.k, cfg.c);
  return buf;
}

json params_json(const bh::Params& p) { return {{"n", p.n()}, {"k", p.k()}, {"c", p.c()}, {"m", p.m()}}; }

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json mat_json(const bh::Mat2& m) { return json::array({json::array({m(0, 0), m(0, 1)}), json::array({m(1, 0), m(1, 1)})}); }

bh::TraceOptions trace_options(const RunConfig& cfg) {
  bh::TraceOptions opt;
  if (cfg.rel_tol) opt.ctl.rel_tol = *cfg.rel_tol;
  if (cfg.abs_tol) opt.ctl.abs_tol = *cfg.abs_tol;
  if (cfg.seed_eps) opt.seed_eps = *cfg.seed_eps;
  opt.ctl.validate();
  return opt;
}

bh::WaveOptions wave_options(const RunConfig& cfg) {
  bh::WaveOptions opt;
  if (cfg.rel_tol) opt.rel_tol = *cfg.rel_tol;
  if (cfg.abs_tol) opt.abs_tol = *cfg.abs_tol;
  if (cfg.seed_eps) opt.seed_eps = *cfg.seed_eps;
  opt.validate();
  return opt;
}

bh::PdeConfig pde_config(const RunConfig& cfg) {
  bh::PdeConfig pc;
  pc.N = cfg.N;
  pc.T = cfg.T;
  pc.L = cfg.L;
  pc.snapshot_stride = cfg.snapshot_stride;
  pc.validate();
  return pc;
}

void require_wave_speed(const bh::Params& p) {
  if (p.c() < 2.0 && std::abs(p.c() - 2.0) >= bh::kNodeBand) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "traveling waves are guaranteed only for c >= 2; got c = %g", p.c());
    throw bh::PreconditionError(buf);
  }
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string out;
  for (const auto& c : cells) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out + "\n";
}

json analyze_json(const bh::Params& p) {
  json j;
  j["params"] = params_json(p);
  json fin = json::array();
  for (const auto& e : bh::finite_equilibria(p)) {
    const bh::EigenData d = bh::eigen_data(p, e);
    json vecs = nullptr;
    if (d.vectors) {
      vecs = json::array();
      for (const auto& v : *d.vectors) vecs.push_back(json::array({v.x, v.y}));
    }
    fin.push_back({{"label", e.label},
                   {"x", e.finite->x},
                   {"y", e.finite->y},
                   {"kind", std::string(bh::to_string(e.kind))},
                   {"eigenvalues", json::array({complex_json(d.values[0]), complex_json(d.values[1])})},
                   {"eigenvectors", vecs}});
  }
  j["finite_equilibria"] = fin;

  json inf = json::array();
  for (const auto& e : bh::infinite_equilibria(p)) {
    json sectors = json::array();
    for (bh::Sector s : e.sectors) sectors.push_back(std::string(bh::to_string(s)));
    inf.push_back({{"label", e.label},
                   {"chart", e.chart_name()},
                   {"u", e.at_infinity->u},
                   {"v", e.at_infinity->v},
                   {"kind", std::string(bh::to_string(e.kind))},
                   {"sectors", sectors}});
  }
  j["infinite_equilibria"] = inf;

  if (p.n() == 1 && p.k() == 1) {
    j["blowup"] = nullptr;
  } else {
    const bh::BlowupCase bc = bh::blowup_case(p);
    const auto [a, b] = bh::blowup_weights(p, bc);
    json circle = json::array();
    for (const auto& ce : bh::circle_equilibria(p, bc)) {
      const bh::CircleJacobian cj = bh::circle_jacobian(p, bc, ce);
      circle.push_back({{"label", ce.label},
                        {"theta", ce.theta},
                        {"residual", bh::circle_residual(p, bc, ce.theta)},
                        {"kind", std::string(bh::to_string(ce.kind))},
                        {"radial_sign", cj.radial_sign},
                        {"angular_sign", cj.angular_sign},
                        {"jacobian", mat_json(cj.jac)}});
    }
    j["blowup"] = {{"case", std::string(bh::to_string(bc))},
                   {"chart", "U2"},
                   {"weights", json::array({a, b})},
                   {"circle_equilibria", circle}};
  }

  const double bound = bh::bendixson_bound(p);
  const bh::RegionTag tag = bh::bendixson_region(p);
  char stmt[160];
  if (tag == bh::RegionTag::B1) {
    std::snprintf(stmt, sizeof stmt, "divergence x^%d - c is negative on x < %.17g", p.k(), bound);
  } else {
    std::snprintf(stmt, sizeof stmt, "divergence x^%d - c is negative on |x| < %.17g", p.k(), bound);
  }
  j["bendixson"] = {{"region", std::string(bh::to_string(tag))},
                    {"bound", bound},
                    {"statement", stmt},
                    {"closed_orbits_excluded", p.c() >= 1.0}};
  return j;
}

std::string analyze_csv(const bh::Params& p) {
  std::string out = csv_row({"label", "chart", "u_or_x", "v_or_y", "kind"});
  for (const auto& e : bh::finite_equilibria(p)) {
    out += csv_row({e.label, "finite", fmt17(e.finite->x), fmt17(e.finite->y), std::string(bh::to_string(e.kind))});
  }
  for (const auto& e : bh::infinite_equilibria(p)) {
    out += csv_row({e.label, e.chart_name(), fmt17(e.at_infinity->u), fmt17(e.at_infinity->v),
                    std::string(bh::to_string(e.kind))});
  }
  return out;
}

std::string profile_csv(const bh::WaveProfile& wp) {
  std::string out = csv_row({"xi", "phi", "dphi"});
  for (std::size_t i = 0; i < wp.xi.size(); ++i) out += csv_row({fmt17(wp.xi[i]), fmt17(wp.phi[i]), fmt17(wp.dphi[i])});
  return out;
}

std::string profile_json(const bh::WaveProfile& wp) {
  json j;
  j["params"] = params_json(wp.params);
  j["speed"] = wp.speed;
  j["xi"] = wp.xi;
  j["phi"] = wp.phi;
  j["dphi"] = wp.dphi;
  return j.dump(2) + "\n";
}

// Integrator samples whose xi lies in [a, b].
bh::WaveProfile clip(const bh::WaveProfile& wp, double a, double b) {
  bh::WaveProfile out;
  out.speed = wp.speed;
  out.params = wp.params;
  for (std::size_t i = 0; i < wp.xi.size(); ++i) {
    if (wp.xi[i] < a || wp.xi[i] > b) continue;
    out.xi.push_back(wp.xi[i]);
    out.phi.push_back(wp.phi[i]);
    out.dphi.push_back(wp.dphi[i]);
  }
  return out;
}

struct SweepRow {
  Cell cell;
  bh::PortraitResult result;
};

}  // namespace

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<Cell> default_cells() {
  return {{1, 1, 0.5}, {1, 1, 1.0}, {1, 1, 1.5}, {1, 1, 2.5}, {1, 2, 1.5}, {1, 2, 2.5},
          {2, 1, 1.5}, {2, 1, 2.5}, {2, 2, 1.5}, {2, 2, 3.0}, {2, 3, 1.5}, {2, 3, 2.5}};
}

std::vector<Cell> parse_cells(const std::string& spec) {
  std::vector<Cell> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    Cell cell;
    char sep1 = 0, sep2 = 0;
    std::istringstream is(item);
    if (!(is >> cell.n >> sep1 >> cell.k >> sep2 >> cell.c) || sep1 != ':' || sep2 != ':' || !(is >> std::ws).eof()) {
      throw bh::ConfigError("malformed cell '" + item + "', expected n:k:c");
    }
    out.push_back(cell);
  }
  return out;
}

std::string default_format(const std::string& command) {
  if (command == "portrait") return "svg";
  if (command == "wave" || command == "sweep") return "csv";
  return "json";
}

void validate(const RunConfig& cfg) {
  if (!kCommands.count(cfg.command)) throw bh::ConfigError("unknown command '" + cfg.command + "'");
  const std::string fmt = cfg.format.empty() ? default_format(cfg.command) : cfg.format;
  if (fmt != "json" && fmt != "csv" && fmt != "svg") throw bh::ConfigError("format must be json, csv or svg");
  if (fmt == "svg" && cfg.command != "portrait") throw bh::ConfigError("svg output is only available for portrait");
  if (fmt == "csv" && cfg.command == "portrait") throw bh::ConfigError("portrait output is json or svg");
  if (cfg.command != "sweep") (void)params_of(cfg);
  for (const auto& [name, v] : {std::pair{"rel-tol", cfg.rel_tol}, {"abs-tol", cfg.abs_tol}, {"seed-eps", cfg.seed_eps}}) {
    if (v && (!(*v > 0.0) || !std::isfinite(*v))) throw bh::ConfigError(std::string(name) + " must be positive");
  }
  if (cfg.xi_range && !(cfg.xi_range->first < cfg.xi_range->second)) {
    throw bh::ConfigError("xi-range must satisfy a < b");
  }
  if (cfg.command == "pde-check") (void)pde_config(cfg);
  if (cfg.cells) (void)parse_cells(*cfg.cells);
}

std::string show_config(const RunConfig& cfg) {
  const bh::TraceOptions trace;
  const bh::WaveOptions wave;
  const bool w = cfg.command == "wave";
  const double rel = cfg.rel_tol.value_or(w ? wave.rel_tol : trace.ctl.rel_tol);
  const double abs = cfg.abs_tol.value_or(w ? wave.abs_tol : trace.ctl.abs_tol);
  const double eps = cfg.seed_eps.value_or(w ? wave.seed_eps : trace.seed_eps);
  std::string cells;
  if (cfg.cells) {
    cells = *cfg.cells;
  } else {
    for (const auto& c : default_cells()) {
      char buf[48];
      std::snprintf(buf, sizeof buf, "%s%d:%d:%g", cells.empty() ? "" : ",", c.n, c.k, c.c);
      cells += buf;
    }
  }
  std::ostringstream os;
  os << "command = \"" << cfg.command << "\"\n"
     << "n = " << cfg.n << "\n"
     << "k = " << cfg.k << "\n"
     << "c = " << fmt17(cfg.c) << "\n"
     << "m = " << cfg.m << "\n"
     << "out = \"" << cfg.out << "\"\n"
     << "format = \"" << (cfg.format.empty() ? default_format(cfg.command) : cfg.format) << "\"\n"
     << "rel-tol = " << fmt17(rel) << "\n"
     << "abs-tol = " << fmt17(abs) << "\n"
     << "seed-eps = " << fmt17(eps) << "\n"
     << "N = " << cfg.N << "\n"
     << "T = " << fmt17(cfg.T) << "\n"
     << "L = " << fmt17(cfg.L) << "\n"
     << "snapshot-stride = " << cfg.snapshot_stride << "\n";
  if (cfg.xi_range) {
    os << "xi-range = [" << fmt17(cfg.xi_range->first) << ", " << fmt17(cfg.xi_range->second) << "]\n";
  } else {
    os << "xi-range = []\n";
  }
  os << "cells = \"" << cells << "\"\n";
  return os.str();
}

CommandOutput cmd_analyze(const RunConfig& cfg) {
  const bh::Params p = params_of(cfg);
  const std::string fmt = cfg.format.empty() ? default_format(cfg.command) : cfg.format;
  CommandOutput out;
  const json j = analyze_json(p);
  if (fmt == "csv") {
    out.files.push_back({stem(cfg) + ".csv", analyze_csv(p)});
  } else {
    out.files.push_back({stem(cfg) + ".json", j.dump(2) + "\n"});
  }
  std::ostringstream os;
  os << "finite:";
  for (const auto& e : j["finite_equilibria"]) os << " " << e["label"].get<std::string>() << "(" << e["kind"].get<std::string>() << ")";
  os << "; infinite:";
  for (const auto& e : j["infinite_equilibria"]) os << " " << e["label"].get<std::string>();
  out.summary = os.str();
  return out;
}

CommandOutput cmd_portrait(const RunConfig& cfg) {
  const bh::Params p = params_of(cfg);
  const std::string fmt = cfg.format.empty() ? default_format(cfg.command) : cfg.format;
  const bh::TraceOptions opt = trace_options(cfg);
  const bh::PortraitResult r = bh::classify_portrait(p, opt);
  const bh::PortraitDocument doc = bh::export_portrait(r, opt);
  CommandOutput out;
  const OutputFile svg{stem(cfg) + ".svg", render_svg(doc)};
  const OutputFile js{stem(cfg) + ".json", bh::to_json(doc)};
  if (fmt == "svg") {
    out.files = {svg, js};
  } else {
    out.files = {js, svg};
  }
  out.summary = "class " + r.cls.tag + " (" + r.cls.equivalence_class + ")" +
                (r.assumes_no_limit_cycles ? ", assumes no limit cycles" : "") +
                ", evidence_match=" + (r.evidence_match ? "true" : "false");
  return out;
}

CommandOutput cmd_wave(const RunConfig& cfg) {
  const bh::Params p = params_of(cfg);
  require_wave_speed(p);
  const std::string fmt = cfg.format.empty() ? default_format(cfg.command) : cfg.format;
  const bh::WaveProfile wp = bh::shoot_heteroclinic(p, wave_options(cfg));
  const bh::AsymptoticsReport rep = bh::verify_asymptotics(wp);
  const double residual = bh::wave_residual(wp);
  const bool residual_ok = residual < 1e-6;

  bh::WaveProfile emitted = wp;
  if (cfg.xi_range) {
    emitted = clip(wp, cfg.xi_range->first, cfg.xi_range->second);
    if (emitted.xi.size() < 2) throw bh::ConfigError("xi-range contains fewer than two profile samples");
  }
  double lo = 1.0, hi = 0.0;
  for (double v : emitted.phi) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }

  json j;
  j["params"] = params_json(p);
  j["speed"] = wp.speed;
  j["samples"] = wp.xi.size();
  j["xi_min"] = wp.xi.front();
  j["xi_max"] = wp.xi.back();
  j["residual"] = {{"value", residual}, {"tol", 1e-6}, {"pass", residual_ok}};
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"applicable", c.applicable}, {"value", c.value}, {"tol", c.tol}});
  }
  j["checks"] = checks;
  j["emitted"] = {{"samples", emitted.xi.size()},
                  {"xi_min", emitted.xi.front()},
                  {"xi_max", emitted.xi.back()},
                  {"phi_min", lo},
                  {"phi_max", hi}};
  const bool pass = rep.all_pass() && residual_ok;
  j["pass"] = pass;

  CommandOutput out;
  out.files.push_back(
      {stem(cfg) + (fmt == "json" ? ".json" : ".csv"), fmt == "json" ? profile_json(emitted) : profile_csv(emitted)});
  out.files.push_back({stem(cfg) + "-report.json", j.dump(2) + "\n"});
  out.exit_code = pass ? kExitOk : kExitNumerical;
  std::ostringstream os;
  os << (pass ? "pass" : "FAIL") << ": residual " << fmt17(residual) << ", phi in [" << fmt17(lo) << ", " << fmt17(hi)
     << "]";
  for (const auto& c : rep.checks) {
    if (c.applicable && !c.pass) os << "; failed " << c.name;
  }
  out.summary = os.str();
  return out;
}

CommandOutput cmd_pde_check(const RunConfig& cfg) {
  const bh::Params p = params_of(cfg);
  require_wave_speed(p);
  const bh::PdeConfig pc = pde_config(cfg);
  const bh::WaveProfile wp = bh::shoot_heteroclinic(p, wave_options(cfg));
  const bh::SpeedReport rep = bh::speed_estimate(p, wp, pc);
  const bool pass = rep.relative_error < 0.02;

  json j;
  j["params"] = params_json(p);
  j["grid"] = {{"L", pc.L}, {"N", pc.N}, {"dz", pc.dz()}, {"T", pc.T}, {"dt", pc.time_step()},
               {"scheme", std::string(bh::to_string(pc.scheme))}};
  j["speed"] = rep.speed;
  j["relative_error"] = rep.relative_error;
  j["shape_drift"] = rep.shape_drift;
  j["min_w"] = rep.min_w;
  j["max_w"] = rep.max_w;
  json fronts = json::array();
  for (std::size_t i = 0; i < rep.times.size(); ++i) fronts.push_back(json::array({rep.times[i], rep.fronts[i]}));
  j["fronts"] = fronts;
  j["pass"] = pass;

  CommandOutput out;
  out.files.push_back({stem(cfg) + ".json", j.dump(2) + "\n"});
  if (!rep.snapshots.empty()) {
    std::string csv = csv_row({"t", "z", "w"});
    for (const auto& snap : rep.snapshots) {
      for (std::size_t i = 0; i < snap.w.size(); ++i) csv += csv_row({fmt17(snap.t), fmt17(rep.initial.z[i]), fmt17(snap.w[i])});
    }
    out.files.push_back({stem(cfg) + "-snapshots.csv", csv});
  }
  out.exit_code = pass ? kExitOk : kExitNumerical;
  out.summary = std::string(pass ? "pass" : "FAIL") + ": speed " + fmt17(rep.speed) + ", relative error " +
                fmt17(rep.relative_error) + ", shape drift " + fmt17(rep.shape_drift);
  return out;
}

CommandOutput cmd_sweep(const RunConfig& cfg) {
  const std::vector<Cell> cells = cfg.cells ? parse_cells(*cfg.cells) : default_cells();
  const std::string fmt = cfg.format.empty() ? default_format(cfg.command) : cfg.format;
  bh::TraceOptions opt = trace_options(cfg);
  opt.parallel = false;

  std::vector<std::future<SweepRow>> jobs;
  for (const Cell& cell : cells) {
    const bh::Params p(cell.n, cell.k, cell.c, cfg.m);
    jobs.push_back(std::async(std::launch::async, [cell, p, opt] { return SweepRow{cell, bh::classify_portrait(p, opt)}; }));
  }
  std::vector<SweepRow> rows;
  for (auto& f : jobs) rows.push_back(f.get());

  CommandOutput out;
  std::set<std::string> classes;
  bool all_match = true;
  if (fmt == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.cell.n},
                     {"k", r.cell.k},
                     {"c", r.cell.c},
                     {"tag", r.result.cls.tag},
                     {"equivalence_class", r.result.cls.equivalence_class},
                     {"evidence_match", r.result.evidence_match},
                     {"fixture_source", std::string(bh::to_string(r.result.source))},
                     {"assumes_no_limit_cycles", r.result.assumes_no_limit_cycles}});
    }
    out.files.push_back({"sweep.json", json{{"rows", arr}}.dump(2) + "\n"});
  } else {
    std::string csv = csv_row({"n", "k", "c", "tag", "equivalence_class", "evidence_match", "fixture_source",
                               "assumes_no_limit_cycles"});
    for (const auto& r : rows) {
      csv += csv_row({std::to_string(r.cell.n), std::to_string(r.cell.k), fmt17(r.cell.c), r.result.cls.tag,
                      r.result.cls.equivalence_class, r.result.evidence_match ? "true" : "false",
                      std::string(bh::to_string(r.result.source)), r.result.assumes_no_limit_cycles ? "true" : "false"});
    }
    out.files.push_back({"sweep.csv", csv});
  }
  for (const auto& r : rows) {
    classes.insert(r.result.cls.equivalence_class);
    all_match = all_match && r.result.evidence_match;
  }
  out.summary = std::to_string(rows.size()) + " cells, " + std::to_string(classes.size()) +
                " equivalence classes, evidence_match " + (all_match ? "true" : "false") + " in every cell";
  if (!all_match) {
    out.summary = std::to_string(rows.size()) + " cells, " + std::to_string(classes.size()) +
                  " equivalence classes, evidence mismatch in at least one cell";
  }
  return out;
}

CommandOutput run(const RunConfig& cfg, std::string& error) {
  try {
    validate(cfg);
    if (cfg.command == "analyze") return cmd_analyze(cfg);
    if (cfg.command == "portrait") return cmd_portrait(cfg);
    if (cfg.command == "wave") return cmd_wave(cfg);
    if (cfg.command == "pde-check") return cmd_pde_check(cfg);
    return cmd_sweep(cfg);
  } catch (const bh::NumericalError& e) {
    error = e.what();
    return {kExitNumerical, {}, {}};
  } catch (const std::invalid_argument& e) {
    error = e.what();
    return {kExitValidation, {}, {}};
  } catch (const std::logic_error& e) {
    error = e.what();
    return {kExitValidation, {}, {}};
  } catch (const std::exception& e) {
    error = e.what();
    return {kExitNumerical, {}, {}};
  }
}

}  // namespace bhcli
