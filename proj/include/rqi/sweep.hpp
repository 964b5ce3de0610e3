#pragma once

// Parameter sweeps over r and the per-figure CSV files they produce.

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "rqi/error.hpp"
#include "rqi/report.hpp"
#include "rqi/unruh.hpp"

namespace rqi {

enum class Figure {
  fig2_entropy,
  fig3_negativity,
  fig4_eof,
  fig5_mutual_info,
  fig6_tangles,
  fig7_eta,
  fig8_single_qubit,
};

inline constexpr std::array<Figure, 7> all_figures = {
    Figure::fig2_entropy, Figure::fig3_negativity,  Figure::fig4_eof,         Figure::fig5_mutual_info,
    Figure::fig6_tangles, Figure::fig7_eta,         Figure::fig8_single_qubit};

constexpr std::string_view figure_name(Figure f) {
  switch (f) {
    case Figure::fig2_entropy: return "fig2_entropy";
    case Figure::fig3_negativity: return "fig3_negativity";
    case Figure::fig4_eof: return "fig4_eof";
    case Figure::fig5_mutual_info: return "fig5_mutual_info";
    case Figure::fig6_tangles: return "fig6_tangles";
    case Figure::fig7_eta: return "fig7_eta";
    case Figure::fig8_single_qubit: return "fig8_single_qubit";
  }
  return "";
}

/// Accepts the full identifier ("fig3_negativity") or its prefix ("fig3").
inline std::optional<Figure> parse_figure(std::string_view text) {
  for (Figure f : all_figures) {
    const auto name = figure_name(f);
    if (text == name || text == name.substr(0, name.find('_'))) return f;
  }
  return std::nullopt;
}

inline std::string csv_header(Figure f) {
  switch (f) {
    case Figure::fig2_entropy: return "r,S_A,S_I,S_II";
    case Figure::fig3_negativity: return "r,N_AI,N_III,N_AII";
    case Figure::fig4_eof: return "r,EF_AI,EF_III,EF_AII";
    case Figure::fig5_mutual_info: return "r,I_AI,I_III,I_AII";
    case Figure::fig6_tangles: return "r,tau_AI,tau_III,tau_AII";
    case Figure::fig7_eta: return "r,eta_AI,eta_III,eta_AII";
    case Figure::fig8_single_qubit: return "r,sbar2_A,sbar2_I,sbar2_II";
  }
  return "";
}

inline std::array<double, 4> csv_row(Figure f, const PointEvaluation& ev) {
  const auto& m = ev.measures;
  const auto& c = ev.complementarity;
  switch (f) {
    case Figure::fig2_entropy: return {m.r, m.s_a, m.s_i, m.s_ii};
    case Figure::fig3_negativity:
      return {m.r, m.a_i.log_negativity, m.i_ii.log_negativity, m.a_ii.log_negativity};
    case Figure::fig4_eof: return {m.r, m.a_i.eof, m.i_ii.eof, m.a_ii.eof};
    case Figure::fig5_mutual_info:
      return {m.r, m.a_i.mutual_information, m.i_ii.mutual_information, m.a_ii.mutual_information};
    case Figure::fig6_tangles: return {m.r, m.a_i.tangle, m.i_ii.tangle, m.a_ii.tangle};
    case Figure::fig7_eta: return {m.r, c.a_i.eta, c.i_ii.eta, c.a_ii.eta};
    case Figure::fig8_single_qubit: return {m.r, c.a.sbar2, c.i.sbar2, c.ii.sbar2};
  }
  return {};
}

/// 17 significant digits: round-trips every binary64 value.
inline std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct SweepConfig {
  double r_min = 0.0;
  double r_max = quarter_pi;
  int steps = 257;
  std::vector<Figure> figures{all_figures.begin(), all_figures.end()};
  std::filesystem::path out_dir = ".";
};

inline void validate(const SweepConfig& cfg) {
  if (!(cfg.r_min >= 0.0 && cfg.r_min <= cfg.r_max && cfg.r_max <= quarter_pi))
    throw Error(ErrorCode::out_of_range, "require 0 <= r_min <= r_max <= pi/4");
  if (cfg.steps < 2) throw Error(ErrorCode::out_of_range, "steps must be at least 2");
}

/// Evenly spaced r values including both endpoints exactly.
inline std::vector<double> sweep_grid(const SweepConfig& cfg) {
  validate(cfg);
  std::vector<double> r(static_cast<std::size_t>(cfg.steps));
  const double span = cfg.r_max - cfg.r_min;
  for (int k = 0; k < cfg.steps; ++k)
    r[k] = std::clamp(cfg.r_min + span * k / (cfg.steps - 1), cfg.r_min, cfg.r_max);
  r.back() = cfg.r_max;
  return r;
}

/// Evaluates every grid point; points are independent and split across threads.
inline std::vector<PointEvaluation> evaluate_grid(const std::vector<double>& grid,
                                                  unsigned threads = std::thread::hardware_concurrency()) {
  std::vector<PointEvaluation> out(grid.size());
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(1, grid.size())));
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t)
      workers.emplace_back([&, t] {
        for (std::size_t k = t; k < grid.size(); k += threads) out[k] = evaluate_point(AccelParam(grid[k]));
      });
  }
  return out;
}

inline std::string render_csv(Figure f, const std::vector<PointEvaluation>& points) {
  std::string text = csv_header(f) + "\n";
  for (const auto& ev : points) {
    const auto row = csv_row(f, ev);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) text += ',';
      text += format_number(row[k]);
    }
    text += '\n';
  }
  return text;
}

/// Writes one <figure>.csv per selected figure; returns the paths written.
inline std::vector<std::filesystem::path> run_sweep(const SweepConfig& cfg) {
  const auto points = evaluate_grid(sweep_grid(cfg));
  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) throw Error(ErrorCode::io_error, "cannot create " + cfg.out_dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> written;
  for (Figure f : cfg.figures) {
    const auto path = cfg.out_dir / (std::string(figure_name(f)) + ".csv");
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    os << render_csv(f, points);
    if (!os) throw Error(ErrorCode::io_error, "cannot write " + path.string());
    written.push_back(path);
  }
  return written;
}

}  // namespace rqi
