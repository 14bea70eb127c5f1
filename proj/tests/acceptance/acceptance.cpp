// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <random>
#include <set>
#include <string>

#include "bhphase/blowup.hpp"
#include "bhphase/compact.hpp"
#include "bhphase/equilibria.hpp"
#include "bhphase/flow.hpp"
#include "bhphase/pde.hpp"
#include "bhphase/wave.hpp"
#include "cli.hpp"

using namespace bh;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < budget_s;
  const bool pass = o.pass && in_time;
  failures += !pass;
  std::printf("[%s] %d %s: %s; %.2f s (budget %.0f s)%s\n", pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs,
              budget_s, in_time ? "" : " OVER BUDGET");
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

bool by_real(std::complex<double> a, std::complex<double> b) {
  return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
}

Outcome equilibrium_formulas() {
  const double cs[] = {0.1, 0.5, 0.9, 1.0, 1.3, 1.99, 2.0, 2.01, 3.0, 7.5};
  double worst = 0.0;
  int cells = 0, wrong = 0;
  for (int n : {1, 2}) {
    for (int k = 1; k <= 5; ++k) {
      for (double c : cs) {
        const Params p(n, k, c);
        ++cells;
        for (const auto& e : finite_equilibria(p)) {
          const Mat2 j = jacobian(p, *e.finite);
          Eigen::Matrix2d m;
          m << j(0, 0), j(0, 1), j(1, 0), j(1, 1);
          const Eigen::Vector2cd ev = Eigen::EigenSolver<Eigen::Matrix2d>(m).eigenvalues();
          std::array<std::complex<double>, 2> num{ev[0], ev[1]};
          auto closed = eigen_data(p, e).values;
          std::sort(num.begin(), num.end(), by_real);
          std::sort(closed.begin(), closed.end(), by_real);
          for (int i = 0; i < 2; ++i) worst = std::max(worst, std::abs(num[i] - closed[i]));
          EquilibriumKind want = EquilibriumKind::Saddle;
          if (e.label == "E0") want = c < 2.0 ? EquilibriumKind::StableFocus : EquilibriumKind::StableNode;
          wrong += classify(p, e) != want;
        }
      }
    }
  }
  return {worst < 1e-10 && wrong == 0 && cells == 100,
          std::to_string(cells) + " cells, max |eig diff| " + fmt("%.2e", worst) + " (tol 1e-10), " +
              std::to_string(wrong) + " misclassified"};
}

Outcome chart_certification() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> uu(-2.0, 2.0);
  std::uniform_real_distribution<double> vv(1e-3, 1.0);
  double worst = 0.0;
  long points = 0;
  for (int n : {1, 2}) {
    for (int k : {1, 2, 3}) {
      const Params p(n, k, 1.7);
      for (ChartId id : {ChartId::U1, ChartId::V1, ChartId::U2, ChartId::V2}) {
        for (int i = 0; i < 1000; ++i) {
          worst = std::max(worst, pushforward_residual(p, {id, uu(rng), vv(rng)}));
          ++points;
        }
      }
    }
  }
  return {worst < 1e-9, std::to_string(points) + " chart points over 6 (n,k) cases x 4 charts, max residual " +
                            fmt("%.2e", worst) + " (tol 1e-9)"};
}

Outcome blowup_circle() {
  double worst_res = 0.0, worst_jac = 0.0;
  bool saddles_ok = true;
  const auto diag_err = [](const Mat2& j, double a, double b) {
    return std::max({std::abs(j(0, 0) - a), std::abs(j(0, 1)), std::abs(j(1, 0)), std::abs(j(1, 1) - b)});
  };
  for (auto [n, k] : {std::pair{1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}}) {
    const Params p(n, k, 1.5);
    const BlowupCase bc = blowup_case(p);
    const auto ces = circle_equilibria(p, bc);
    int saddles = 0;
    for (const auto& ce : ces) {
      worst_res = std::max(worst_res, std::abs(circle_residual(p, bc, ce.theta)));
      saddles += ce.kind == CircleKind::Saddle;
      const Mat2 j = circle_jacobian(p, bc, ce).jac;
      if (ce.label == "theta0" || ce.label == "theta0^1") worst_jac = std::max(worst_jac, diag_err(j, -1.0, 1.0));
      if (ce.label == "theta3^1") worst_jac = std::max(worst_jac, diag_err(j, 1.0, -1.0));
      if (ce.label == "theta2") {
        const double s = k % 2 == 0 ? 1.0 : -1.0;
        worst_jac = std::max(worst_jac, diag_err(j, -s, s));
      }
    }
    if (bc != BlowupCase::Buc2) saddles_ok = saddles_ok && ces.size() == 4 && saddles == 2;
  }
  return {worst_res < 1e-12 && worst_jac < 1e-8 && saddles_ok,
          "max residual " + fmt("%.2e", worst_res) + " (tol 1e-12), max Jacobian error " + fmt("%.2e", worst_jac) +
              " (tol 1e-8), two saddles in each 4-point circle: " + (saddles_ok ? "yes" : "no")};
}

Outcome class_table() {
  bhcli::RunConfig cfg;
  cfg.command = "sweep";
  cfg.format = "json";
  const auto out = bhcli::cmd_sweep(cfg);
  const auto j = nlohmann::json::parse(out.files.at(0).content);
  const std::vector<std::string> want{"I",    "II",   "III.1", "III.2", "IV.1",  "IV.2",
                                      "V.1",  "V.2",  "VI.1",  "VI.2",  "VII.1", "VII.2"};
  std::vector<std::string> got;
  std::set<std::string> classes;
  int matched = 0;
  for (const auto& row : j["rows"]) {
    got.push_back(row["tag"]);
    classes.insert(row["equivalence_class"].get<std::string>());
    matched += row["evidence_match"].get<bool>();
  }
  return {got == want && classes.size() == 7 && matched == 12,
          std::to_string(got.size()) + " rows, table " + (got == want ? "exact" : "MISMATCH") + ", " +
              std::to_string(classes.size()) + " equivalence classes, evidence match in " + std::to_string(matched) +
              "/12"};
}

Outcome wave_profiles() {
  double worst_res = 0.0, worst_inv = 0.0;
  int ok = 0, total = 0;
  std::string failed;
  for (int n : {1, 2}) {
    for (int k : {1, 2, 3}) {
      for (double c : {2.0, 2.5, 3.0}) {
        ++total;
        const Params p(n, k, c);
        const WaveProfile a = shoot_heteroclinic(p);
        WaveOptions half;
        half.seed_eps = 5e-8;
        const WaveProfile b = shoot_heteroclinic(p, half);
        const double res = wave_residual(a);
        const double inv = profile_distance(a, b);
        worst_res = std::max(worst_res, res);
        worst_inv = std::max(worst_inv, inv);
        const AsymptoticsReport rep = verify_asymptotics(a, 1e-6);
        if (rep.all_pass() && res < 1e-6 && inv < 1e-6) {
          ++ok;
        } else {
          failed += fmt(" (%g,", n) + fmt("%g,", k) + fmt("%g)", c);
        }
      }
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " waves verified, max residual " +
                           fmt("%.2e", worst_res) + " (tol 1e-6), max translation distance " + fmt("%.2e", worst_inv) +
                           " (tol 1e-6)" + (failed.empty() ? "" : "; failed" + failed)};
}

Outcome pde_case(int n, int k, double c) {
  const Params p(n, k, c);
  PdeConfig cfg;
  cfg.N = 4096;
  cfg.T = 10.0;
  const SpeedReport rep = speed_estimate(p, shoot_heteroclinic(p), cfg);
  return {rep.relative_error < 0.02 && rep.shape_drift < 1e-2,
          "speed " + fmt("%.6f", rep.speed) + fmt(" vs c = %g", c) + ", relative error " +
              fmt("%.2e", rep.relative_error) + " (tol 2e-2), shape drift " + fmt("%.2e", rep.shape_drift) +
              " (tol 1e-2)"};
}

Outcome no_cycles() {
  int searches = 0, found = 0;
  long crossings = 0;
  CycleBudget budget;
  budget.grid = 20;
  for (auto [n, k] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    for (double c : {0.5, 1.0, 1.5, 2.0}) {
      const CycleSearchResult r = cycle_search(Params(n, k, c), Window{}, budget);
      ++searches;
      found += r.found();
      crossings += r.crossings;
    }
  }
  return {found == 0, std::to_string(searches) + " searches (20x20 seeds, c in {0.5, 1, 1.5, 2}), " +
                          std::to_string(crossings) + " section crossings, " + std::to_string(found) +
                          " return witnesses"};
}

}  // namespace

int main() {
  criterion(1, "equilibrium formulas", 1.0, equilibrium_formulas);
  criterion(2, "chart certification", 5.0, chart_certification);
  criterion(3, "blow-up circle", 5.0, blowup_circle);
  criterion(4, "portrait class table", 120.0, class_table);
  criterion(5, "traveling wave", 60.0, wave_profiles);
  criterion(6, "PDE cross-check n=1 k=1 c=2", 120.0, [] { return pde_case(1, 1, 2.0); });
  criterion(6, "PDE cross-check n=2 k=1 c=2.5", 120.0, [] { return pde_case(2, 1, 2.5); });
  criterion(7, "no closed orbits", 60.0, no_cycles);
  std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
