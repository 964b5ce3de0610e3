// rqi: sweeps, single-point reports, the two-observer scenario, and the
// verification suite for a fermionic Bell pair seen by an accelerated observer.
//
// Exit codes: 0 success, 1 verification or runtime failure, 2 usage error.

#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rqi/report.hpp"
#include "rqi/sweep.hpp"
#include "rqi/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

/// Parses "0.3", "pi/4", "pi", "3*pi/16", "3pi/16".
std::optional<double> parse_angle(const std::string& text) {
  const auto pos = text.find("pi");
  try {
    if (pos == std::string::npos) {
      std::size_t used = 0;
      const double v = std::stod(text, &used);
      return used == text.size() ? std::optional(v) : std::nullopt;
    }
    double numerator = 1.0, denominator = 1.0;
    std::string head = text.substr(0, pos), tail = text.substr(pos + 2);
    if (!head.empty() && head.back() == '*') head.pop_back();
    if (!head.empty()) {
      std::size_t used = 0;
      numerator = std::stod(head, &used);
      if (used != head.size()) return std::nullopt;
    }
    if (!tail.empty()) {
      if (tail.front() != '/') return std::nullopt;
      std::size_t used = 0;
      denominator = std::stod(tail.substr(1), &used);
      if (used != tail.size() - 1) return std::nullopt;
    }
    return numerator * std::numbers::pi / denominator;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

CLI::Validator angle_validator() {
  return CLI::Validator(
      [](std::string& s) { return parse_angle(s) ? std::string{} : "not an angle: " + s; }, "ANGLE");
}

double angle(const std::string& text) { return *parse_angle(text); }

std::string format_complex(rqi::cplx z) {
  if (z.imag() == 0.0) return rqi::format_number(z.real());
  return rqi::format_number(z.real()) + (z.imag() < 0 ? "-" : "+") + rqi::format_number(std::abs(z.imag())) + "i";
}

int cmd_sweep(const rqi::SweepConfig& cfg) {
  const auto files = rqi::run_sweep(cfg);
  for (const auto& f : files) std::cout << f.string() << '\n';
  return exit_ok;
}

int cmd_point(double r) {
  const auto ev = rqi::evaluate_point(rqi::AccelParam(r));
  const auto& m = ev.measures;
  std::cout << "# Bell state (A, R) with Rob accelerated, r = " << rqi::format_number(r) << "\n"
            << "# pair AI = Alice & Rob (region I), III = regions I & II, AII = Alice & anti-Rob (region II)\n"
            << "# concurrence AI " << rqi::format_number(m.a_i.concurrence) << ", log negativity AI "
            << rqi::format_number(m.a_i.log_negativity) << ", residual tangle "
            << rqi::format_number(m.residual_tangle) << "\n";
  for (const auto& [key, value] : rqi::key_values(ev)) std::cout << key << '=' << rqi::format_number(value) << '\n';
  return exit_ok;
}

int cmd_dual(double r1, double r2) {
  const auto rep = rqi::evaluate_dual(rqi::AccelParam(r1), rqi::AccelParam(r2));
  std::cout << "# Alice accelerates with r1, Rob with r2; both region-II modes traced out\n"
            << "# rho_{A,I} in basis |00>,|01>,|10>,|11>\n";
  for (std::size_t i = 0; i < 4; ++i) {
    std::cout << "#  ";
    for (std::size_t j = 0; j < 4; ++j) std::cout << ' ' << format_complex(rep.rho(i, j));
    std::cout << '\n';
  }
  std::cout << "r1=" << rqi::format_number(rep.r1) << '\n'
            << "r2=" << rqi::format_number(rep.r2) << '\n'
            << "N=" << rqi::format_number(rep.log_negativity) << '\n'
            << "lambda_min=" << rqi::format_number(rep.min_pt_eigenvalue) << '\n'
            << "C=" << rqi::format_number(rep.concurrence) << '\n';
  return exit_ok;
}

int cmd_verify(const rqi::verify::Options& opts) {
  const auto results = rqi::verify::run_acceptance(opts);
  for (const auto& r : results) std::cout << rqi::verify::format_result(r) << '\n';
  for (const auto& r : results)
    if (!r.passed) {
      std::cout << "verification FAILED at criterion " << r.id << ": " << r.first_failure << '\n';
      return exit_failure;
    }
  std::cout << "all " << results.size() << " criteria passed\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement of a fermionic Bell pair shared by inertial and accelerated observers"};
  app.require_subcommand(1);

  rqi::SweepConfig sweep_cfg;
  std::string r_min = "0", r_max = "pi/4", figures, out_dir = ".";
  auto* sweep = app.add_subcommand("sweep", "Write figure CSV files over a grid of r");
  sweep->add_option("--r-min", r_min, "Smallest r (radians; 'pi/8' style accepted)")->check(angle_validator());
  sweep->add_option("--r-max", r_max, "Largest r")->check(angle_validator());
  sweep->add_option("--steps", sweep_cfg.steps, "Number of grid points including both ends")->capture_default_str();
  sweep->add_option("--out-dir", out_dir, "Directory for the CSV files")->capture_default_str();
  sweep->add_option("--figures", figures, "Comma-separated figure ids (fig2,...,fig8); default all");

  std::string r_point;
  auto* point = app.add_subcommand("point", "Report every measure at one r");
  point->add_option("--r", r_point, "Acceleration parameter r in [0, pi/4]")->required()->check(angle_validator());

  std::string r1, r2;
  auto* dual = app.add_subcommand("dual", "Both observers accelerate");
  dual->add_option("--r1", r1, "Alice's r")->required()->check(angle_validator());
  dual->add_option("--r2", r2, "Rob's r")->required()->check(angle_validator());

  rqi::verify::Options verify_opts;
  std::string fault = "none";
  auto* verify = app.add_subcommand("verify", "Run every closed-form, identity and oracle check");
  verify->add_option("--tol", verify_opts.tol, "Tolerance for checks stated at 1e-10")->capture_default_str();
  verify->add_option("--inject-fault", fault, "Mutation fixture")
      ->check(CLI::IsMember({"none", "jw-sign"}))
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*sweep) {
      sweep_cfg.r_min = angle(r_min);
      sweep_cfg.r_max = angle(r_max);
      sweep_cfg.out_dir = out_dir;
      if (!figures.empty()) {
        sweep_cfg.figures.clear();
        std::stringstream ss(figures);
        std::string id;
        while (std::getline(ss, id, ',')) {
          const auto f = rqi::parse_figure(id);
          if (!f) {
            std::cerr << "unknown figure id '" << id << "'\n";
            return exit_usage;
          }
          sweep_cfg.figures.push_back(*f);
        }
      }
      rqi::validate(sweep_cfg);
      return cmd_sweep(sweep_cfg);
    }
    if (*point) return cmd_point(angle(r_point));
    if (*dual) return cmd_dual(angle(r1), angle(r2));
    if (*verify) {
      verify_opts.fault = fault == "jw-sign" ? rqi::verify::Fault::drop_jordan_wigner_sign : rqi::verify::Fault::none;
      return cmd_verify(verify_opts);
    }
  } catch (const rqi::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == rqi::ErrorCode::out_of_range ? exit_usage : exit_failure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_usage;
}
