#include <doctest.h>

#include <json.hpp>
#include <set>
#include <sstream>

#include "bhphase/errors.hpp"
#include "cli.hpp"

using namespace bhcli;
using nlohmann::json;

namespace {

RunConfig config(const std::string& cmd, int n, int k, double c) {
  RunConfig cfg;
  cfg.command = cmd;
  cfg.n = n;
  cfg.k = k;
  cfg.c = c;
  return cfg;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("cell grid parsing") {
  CHECK(parse_cells("").empty());
  const auto cells = parse_cells("1:2:0.5, 2:1:3");
  REQUIRE(cells.size() == 2);
  CHECK(cells[1].n == 2);
  CHECK(cells[1].c == 3.0);
  CHECK_THROWS_AS(parse_cells("1:2"), bh::ConfigError);
  CHECK_THROWS_AS(parse_cells("1;2;3"), bh::ConfigError);
  CHECK(default_cells().size() == 12);
}

TEST_CASE("fmt17 round trips") {
  for (double v : {0.1, 1.0 / 3.0, 2.5e-17, -7.0}) CHECK(std::stod(fmt17(v)) == v);
}

TEST_CASE("validation") {
  std::string err;
  CHECK(run(config("analyze", 3, 1, 1.0), err).exit_code == kExitValidation);
  CHECK(err.find("n must be") != std::string::npos);
  RunConfig m = config("analyze", 1, 1, 1.0);
  m.m = 2;
  CHECK(run(m, err).exit_code == kExitValidation);
  CHECK(run(config("wave", 1, 1, 1.5), err).exit_code == kExitValidation);
  CHECK(err.find("c >= 2") != std::string::npos);
  CHECK(run(config("pde-check", 1, 1, 1.0), err).exit_code == kExitValidation);
  RunConfig fmt = config("analyze", 1, 1, 1.0);
  fmt.format = "svg";
  CHECK(run(fmt, err).exit_code == kExitValidation);
  RunConfig tol = config("portrait", 1, 1, 1.0);
  tol.rel_tol = -1.0;
  CHECK(run(tol, err).exit_code == kExitValidation);
  RunConfig cfl = config("pde-check", 1, 1, 2.0);
  cfl.N = 2;
  CHECK(run(cfl, err).exit_code == kExitValidation);
  CHECK(run(config("bogus", 1, 1, 1.0), err).exit_code == kExitValidation);
}

TEST_CASE("analyze reports") {
  std::string err;
  const CommandOutput a = run(config("analyze", 1, 1, 2.0), err);
  REQUIRE(a.exit_code == kExitOk);
  const json j = json::parse(a.files.at(0).content);
  CHECK(j["finite_equilibria"].size() == 2);
  CHECK(j["finite_equilibria"][0]["kind"] == "stable-node");
  CHECK(j["finite_equilibria"][1]["kind"] == "saddle");
  std::vector<std::string> inf;
  for (const auto& e : j["infinite_equilibria"]) inf.push_back(e["label"]);
  CHECK(inf == std::vector<std::string>{"I1", "I2", "I3^0", "I4^0"});
  CHECK(j["blowup"].is_null());
  CHECK(j["bendixson"]["region"] == "B1");

  const CommandOutput b = run(config("analyze", 2, 1, 1.0), err);
  const json jb = json::parse(b.files.at(0).content);
  CHECK(jb["finite_equilibria"].size() == 3);
  CHECK(jb["infinite_equilibria"].size() == 2);
  CHECK(jb["finite_equilibria"][0]["kind"] == "stable-focus");
  CHECK(jb["blowup"]["case"] == "buc2");
  CHECK(jb["blowup"]["circle_equilibria"].size() == 6);

  RunConfig csv = config("analyze", 2, 2, 1.0);
  csv.format = "csv";
  const auto rows = parse_csv(run(csv, err).files.at(0).content);
  CHECK(rows.size() == 8);
  CHECK(rows[0] == std::vector<std::string>{"label", "chart", "u_or_x", "v_or_y", "kind"});
}

TEST_CASE("portrait outputs are deterministic") {
  std::string err;
  const CommandOutput a = run(config("portrait", 1, 1, 0.5), err);
  REQUIRE(a.exit_code == kExitOk);
  const CommandOutput b = run(config("portrait", 1, 1, 0.5), err);
  REQUIRE(a.files.size() == 2);
  CHECK(a.files[0].name.ends_with(".svg"));
  CHECK(a.files[0].content == b.files[0].content);
  CHECK(a.files[1].content == b.files[1].content);
  CHECK(a.files[0].content.find("width=\"800\" height=\"800\"") != std::string::npos);
  CHECK(a.files[0].content.find("assumes no limit cycles") != std::string::npos);
  const json doc = json::parse(a.files[1].content);
  CHECK(doc["class"]["tag"] == "I");
  CHECK(doc["class"]["assumes_no_limit_cycles"] == true);

  const CommandOutput c = run(config("portrait", 2, 2, 3.0), err);
  CHECK(json::parse(c.files[1].content)["class"]["tag"] == "VI.2");
  CHECK(c.files[0].content.find("class=\"highlight\"") != std::string::npos);
}

TEST_CASE("wave profile") {
  std::string err;
  const CommandOutput a = run(config("wave", 1, 1, 2.0), err);
  CHECK(a.exit_code == kExitOk);
  const auto rows = parse_csv(a.files.at(0).content);
  CHECK(rows[0] == std::vector<std::string>{"xi", "phi", "dphi"});
  CHECK(a.files.at(0).content.find('\r') == std::string::npos);
  CHECK(json::parse(a.files.at(1).content)["pass"] == true);

  RunConfig r = config("wave", 2, 3, 3.0);
  r.xi_range = std::pair{-30.0, 30.0};
  const CommandOutput b = run(r, err);
  REQUIRE(b.exit_code == kExitOk);
  const auto prof = parse_csv(b.files.at(0).content);
  for (std::size_t i = 1; i < prof.size(); ++i) {
    const double xi = std::stod(prof[i][0]);
    const double phi = std::stod(prof[i][1]);
    CHECK(xi >= -30.0);
    CHECK(xi <= 30.0);
    CHECK(phi >= 1e-9);
    CHECK(phi <= 1.0 - 1e-9);
  }
}

TEST_CASE("sweep table") {
  std::string err;
  RunConfig empty = config("sweep", 1, 1, 1.0);
  empty.cells = "";
  const CommandOutput e = run(empty, err);
  CHECK(e.exit_code == kExitOk);
  CHECK(parse_csv(e.files.at(0).content).size() == 1);

  RunConfig two = config("sweep", 1, 1, 1.0);
  two.cells = "1:1:0.5,2:2:3";
  two.format = "json";
  const json j = json::parse(run(two, err).files.at(0).content);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["tag"] == "I");
  CHECK(j["rows"][1]["tag"] == "VI.2");
}

TEST_CASE("show-config lists every key") {
  RunConfig cfg = config("wave", 1, 1, 2.0);
  const std::string text = show_config(cfg);
  for (const char* key : {"n =", "k =", "c =", "out =", "format =", "rel-tol = 9.9999999999999998e-13", "abs-tol =",
                          "seed-eps =", "N =", "T =", "L =", "xi-range =", "cells ="}) {
    CHECK(text.find(key) != std::string::npos);
  }
}
