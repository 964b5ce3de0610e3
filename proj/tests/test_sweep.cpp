#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "rqi/sweep.hpp"

using Catch::Matchers::WithinAbs;
using namespace rqi;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("rqi-test-sweep-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("grid includes both endpoints exactly") {
  SweepConfig cfg;
  const auto grid = sweep_grid(cfg);
  REQUIRE(grid.size() == 257);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == quarter_pi);
  for (std::size_t k = 1; k < grid.size(); ++k) CHECK(grid[k] > grid[k - 1]);

  cfg.r_min = 0.1;
  cfg.r_max = 0.3;
  cfg.steps = 3;
  const auto small = sweep_grid(cfg);
  CHECK(small == std::vector<double>{0.1, 0.2, 0.3});
}

TEST_CASE("invalid sweep configurations") {
  SweepConfig cfg;
  cfg.r_max = 1.0;
  CHECK_THROWS_AS(validate(cfg), Error);
  cfg = {};
  cfg.steps = 1;
  CHECK_THROWS_AS(validate(cfg), Error);
  cfg = {};
  cfg.r_min = 0.5;
  cfg.r_max = 0.4;
  CHECK_THROWS_AS(sweep_grid(cfg), Error);
}

TEST_CASE("figure identifiers") {
  CHECK(parse_figure("fig3") == Figure::fig3_negativity);
  CHECK(parse_figure("fig8_single_qubit") == Figure::fig8_single_qubit);
  CHECK_FALSE(parse_figure("fig9").has_value());
  CHECK_FALSE(parse_figure("fig3_entropy").has_value());
  CHECK(csv_header(Figure::fig2_entropy) == "r,S_A,S_I,S_II");
  CHECK(csv_header(Figure::fig7_eta) == "r,eta_AI,eta_III,eta_AII");
}

TEST_CASE("numbers are printed with round-trip precision") {
  for (double x : {0.1, std::numbers::pi, 1e-300, -2.5e17, 0.0}) CHECK(std::stod(format_number(x)) == x);
}

TEST_CASE("point evaluation agrees with closed forms") {
  const double r = 0.6, c = std::cos(r), s = std::sin(r);
  const auto ev = evaluate_point(AccelParam(r));
  CHECK_THAT(ev.measures.a_i.concurrence, WithinAbs(c, 1e-10));
  CHECK_THAT(ev.measures.a_ii.tangle, WithinAbs(s * s, 1e-10));
  CHECK_THAT(ev.measures.s_a, WithinAbs(1.0, 1e-12));
  auto h2 = [](double x) { return -x * std::log2(x) - (1 - x) * std::log2(1 - x); };
  CHECK_THAT(ev.measures.s_i, WithinAbs(h2(c * c / 2), 1e-12));
  CHECK_THAT(ev.measures.s_ii, WithinAbs(h2(s * s / 2), 1e-12));
  CHECK_THAT(ev.measures.residual_tangle, WithinAbs(0.0, 1e-10));
  CHECK_THAT(ev.complementarity.i.p, WithinAbs(s * s, 1e-12));
  for (Pair p : all_pairs) {
    CHECK_THAT(ev.complementarity.pair(p).two_qubit_residual, WithinAbs(0.0, 1e-10));
    CHECK(ev.complementarity.pair(p).memms_gap <= 1e-10);
  }

  const auto kv = key_values(ev);
  REQUIRE(kv.front().first == "r");
  bool saw = false;
  for (const auto& [key, value] : kv)
    if (key == "C_AI") {
      saw = true;
      CHECK(value == ev.measures.a_i.concurrence);
    }
  CHECK(saw);
}

TEST_CASE("dual report at infinite acceleration") {
  const auto rep = evaluate_dual(AccelParam::infinite(), AccelParam::infinite());
  CHECK_THAT(rep.log_negativity, WithinAbs(std::log2(1.25), 1e-12));
  CHECK_THAT(rep.min_pt_eigenvalue, WithinAbs(-0.125, 1e-12));
  CHECK_THAT(rep.concurrence, WithinAbs(0.25, 1e-10));
}

TEST_CASE("sweep output does not depend on thread count") {
  SweepConfig cfg;
  cfg.steps = 33;
  const auto grid = sweep_grid(cfg);
  const auto serial = evaluate_grid(grid, 1);
  const auto parallel = evaluate_grid(grid, 4);
  for (Figure f : all_figures) CHECK(render_csv(f, serial) == render_csv(f, parallel));
}

TEST_CASE("run_sweep writes one parseable file per figure") {
  SweepConfig cfg;
  cfg.steps = 9;
  cfg.out_dir = scratch("all");
  const auto files = run_sweep(cfg);
  REQUIRE(files.size() == all_figures.size());
  for (std::size_t k = 0; k < files.size(); ++k) {
    const auto text = slurp(files[k]);
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    CHECK(line == csv_header(all_figures[k]));
    int rows = 0;
    while (std::getline(in, line)) {
      ++rows;
      CHECK(std::count(line.begin(), line.end(), ',') == 3);
    }
    CHECK(rows == 9);
  }
  // second run is byte-identical
  const auto first = slurp(files[1]);
  run_sweep(cfg);
  CHECK(slurp(files[1]) == first);

  // the last fig3 row carries the infinite-acceleration negativities
  std::istringstream in(first);
  std::string line, last;
  while (std::getline(in, line)) last = line;
  std::vector<double> cols;
  std::stringstream ls(last);
  for (std::string cell; std::getline(ls, cell, ',');) cols.push_back(std::stod(cell));
  REQUIRE(cols.size() == 4);
  CHECK(cols[0] == quarter_pi);
  CHECK_THAT(cols[1], WithinAbs(std::log2(1.5), 1e-12));
  CHECK_THAT(cols[3], WithinAbs(std::log2(1.5), 1e-12));
  std::filesystem::remove_all(cfg.out_dir);
}

TEST_CASE("run_sweep honours the figure selection") {
  SweepConfig cfg;
  cfg.steps = 2;
  cfg.figures = {Figure::fig6_tangles};
  cfg.out_dir = scratch("one");
  const auto files = run_sweep(cfg);
  REQUIRE(files.size() == 1);
  CHECK(files[0].filename() == "fig6_tangles.csv");
  CHECK_FALSE(std::filesystem::exists(cfg.out_dir / "fig2_entropy.csv"));
  std::filesystem::remove_all(cfg.out_dir);
}
