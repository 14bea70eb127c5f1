#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "cli.hpp"

namespace {

int emit(const bhcli::RunConfig& cfg, const bhcli::CommandOutput& out) {
  if (cfg.out.empty()) {
    if (!out.files.empty()) std::cout << out.files.front().content;
    if (!out.summary.empty()) std::cerr << out.summary << "\n";
    return out.exit_code;
  }
  std::error_code ec;
  std::filesystem::create_directories(cfg.out, ec);
  if (ec) {
    std::cerr << "error: cannot create output directory " << cfg.out << ": " << ec.message() << "\n";
    return bhcli::kExitValidation;
  }
  for (const auto& f : out.files) {
    const auto path = std::filesystem::path(cfg.out) / f.name;
    std::ofstream os(path, std::ios::binary);
    os << f.content;
    if (!os) {
      std::cerr << "error: cannot write " << path.string() << "\n";
      return bhcli::kExitValidation;
    }
    std::cout << "wrote " << path.string() << "\n";
  }
  if (!out.summary.empty()) std::cout << out.summary << "\n";
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase portraits and traveling waves of the generalized Burgers-Huxley equation", "bhphase"};
  app.set_config("--config", "", "TOML/INI file with one key per long flag; flags on the command line win");
  app.fallthrough();

  bhcli::RunConfig cfg;
  bool show = false;
  double rel = 0.0, abs = 0.0, eps = 0.0;
  std::vector<double> xi;
  std::string cells;

  app.add_flag("--show-config", show, "Print the effective configuration and exit");
  app.add_option("--n", cfg.n, "Reaction exponent n (1 or 2)")->capture_default_str();
  app.add_option("--k", cfg.k, "Advection exponent k (>= 1)")->capture_default_str();
  app.add_option("--c", cfg.c, "Wave speed c (> 0)")->capture_default_str();
  app.add_option("--m", cfg.m, "Reaction prefactor exponent m (only 1 is supported)")->capture_default_str();
  app.add_option("--out", cfg.out, "Output directory; without it the primary document goes to stdout");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "svg"}));
  auto* rel_opt = app.add_option("--rel-tol", rel, "Integrator relative tolerance");
  auto* abs_opt = app.add_option("--abs-tol", abs, "Integrator absolute tolerance");
  auto* eps_opt = app.add_option("--seed-eps", eps, "Separatrix seeding offset");
  app.add_option("--N", cfg.N, "PDE grid points")->capture_default_str();
  app.add_option("--T", cfg.T, "PDE final time")->capture_default_str();
  app.add_option("--L", cfg.L, "PDE half-domain length")->capture_default_str();
  app.add_option("--snapshot-stride", cfg.snapshot_stride, "PDE snapshot interval in steps (0 disables)")
      ->capture_default_str();
  auto* xi_opt = app.add_option("--xi-range", xi, "Restrict the emitted wave profile to [a, b]")->expected(2);
  auto* cells_opt = app.add_option("--cells", cells, "Sweep grid as n:k:c,n:k:c (empty string for none)");

  const std::pair<const char*, const char*> commands[] = {
      {"analyze", "Equilibria, eigen-data, sectors at infinity, blow-up circle and Bendixson region"},
      {"portrait", "Classify the global phase portrait and render it as SVG"},
      {"wave", "Shoot the traveling wave profile and verify its asymptotics"},
      {"pde-check", "Evolve the wave in the PDE and measure the front speed"},
      {"sweep", "Classify a grid of (n, k, c) cells"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return bhcli::kExitValidation;
  }

  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  if (rel_opt->count()) cfg.rel_tol = rel;
  if (abs_opt->count()) cfg.abs_tol = abs;
  if (eps_opt->count()) cfg.seed_eps = eps;
  if (xi_opt->count()) cfg.xi_range = std::pair{xi.at(0), xi.at(1)};
  if (cells_opt->count()) cfg.cells = cells;

  if (show) {
    std::cout << bhcli::show_config(cfg);
    return bhcli::kExitOk;
  }
  if (cfg.command.empty()) {
    std::cerr << "error: a subcommand is required (analyze, portrait, wave, pde-check, sweep)\n";
    return bhcli::kExitValidation;
  }

  std::string error;
  const bhcli::CommandOutput out = bhcli::run(cfg, error);
  if (!error.empty()) {
    std::cerr << "error: " << error << "\n";
    return out.exit_code;
  }
  return emit(cfg, out);
}
