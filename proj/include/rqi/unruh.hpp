#pragma once

// The inertial/accelerated observer scenario: parameter maps, the shared Bell
// state, and the Rindler-expanded density matrices built from it.

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "rqi/error.hpp"
#include "rqi/fermion.hpp"
#include "rqi/qmat.hpp"

namespace rqi {

inline constexpr double quarter_pi = std::numbers::pi / 4.0;

/// Squeezing angle r in [0, pi/4]; r = pi/4 is infinite acceleration.
class AccelParam {
 public:
  explicit AccelParam(double r) : r_(r) {
    if (!(r >= 0.0 && r <= quarter_pi))
      throw Error(ErrorCode::out_of_range, "r = " + std::to_string(r) + " outside [0, pi/4]");
  }

  static AccelParam inertial() { return AccelParam(0.0); }
  static AccelParam infinite() { return AccelParam(quarter_pi); }

  double r() const noexcept { return r_; }
  double cos() const { return std::cos(r_); }
  double sin() const { return std::sin(r_); }

  /// Omega = omega c / a recovered from tan r = exp(-pi Omega).
  double omega_ratio() const {
    if (r_ == 0.0) return std::numeric_limits<double>::infinity();
    return -std::log(std::tan(r_)) / std::numbers::pi;
  }

  /// Set when the parameter came from r_from_omega_ratio().
  std::optional<double> source_omega_ratio() const noexcept { return omega_; }

  friend AccelParam r_from_omega_ratio(double omega_ratio);

 private:
  double r_;
  std::optional<double> omega_;
};

/// r = arctan(exp(-pi Omega)); Omega = +inf maps to r = 0.
inline AccelParam r_from_omega_ratio(double omega_ratio) {
  if (std::isnan(omega_ratio) || omega_ratio < 0.0)
    throw Error(ErrorCode::negative_omega, "Omega = " + std::to_string(omega_ratio));
  AccelParam p(std::min(quarter_pi, std::atan(std::exp(-std::numbers::pi * omega_ratio))));
  p.omega_ = omega_ratio;
  return p;
}

namespace si {
inline constexpr double c = 299792458.0;          // m/s
inline constexpr double hbar = 1.054571817e-34;   // J s
inline constexpr double k_B = 1.380649e-23;       // J/K
}  // namespace si

struct PhysicalParams {
  double omega = 1.0;  // mode angular frequency, rad/s
  double accel = 0.0;  // proper acceleration, m/s^2
  double c = si::c;
  double hbar = si::hbar;
  double k_B = si::k_B;
};

inline void validate(const PhysicalParams& p) {
  if (!(p.omega > 0.0)) throw Error(ErrorCode::out_of_range, "omega must be positive");
  if (!(p.accel >= 0.0)) throw Error(ErrorCode::out_of_range, "acceleration must be non-negative");
}

/// T = hbar a / (2 pi c k_B), in kelvin.
inline double unruh_temperature(const PhysicalParams& p) {
  if (!(p.accel >= 0.0)) throw Error(ErrorCode::out_of_range, "acceleration must be non-negative");
  return p.hbar * p.accel / (p.k_B * 2.0 * std::numbers::pi * p.c);
}

/// Omega = omega / (a / c); infinite for an inertial observer.
inline double omega_ratio(const PhysicalParams& p) {
  validate(p);
  if (p.accel == 0.0) return std::numeric_limits<double>::infinity();
  return p.omega * p.c / p.accel;
}

inline AccelParam accel_param(const PhysicalParams& p) { return r_from_omega_ratio(omega_ratio(p)); }

/// Proper acceleration that yields the given r for a mode of frequency omega.
inline double acceleration_for(const AccelParam& r, double omega, double c = si::c) {
  const double big_omega = r.omega_ratio();
  if (std::isinf(big_omega)) return 0.0;
  if (big_omega == 0.0) return std::numeric_limits<double>::infinity();
  return omega * c / big_omega;
}

inline double fermi_dirac(double omega_ratio) {
  return 1.0 / (std::exp(2.0 * std::numbers::pi * omega_ratio) + 1.0);
}

/// Mean region-I particle number seen in the Minkowski vacuum, sin^2 r.
inline double fd_occupation(const AccelParam& r) {
  const double n = r.sin() * r.sin();
  if (auto omega = r.source_omega_ratio()) {
    const double fd = std::isinf(*omega) ? 0.0 : fermi_dirac(*omega);
    if (std::abs(n - fd) > 1e-12)
      throw Error(ErrorCode::no_solution, "sin^2 r disagrees with the Fermi-Dirac occupation");
  }
  return n;
}

/// Registry of the two inertial particle modes: Alice (A) and Rob (R).
inline RegistryPtr minkowski_registry() {
  return make_registry({{"A", Species::particle, Region::minkowski},
                        {"R", Species::particle, Region::minkowski}});
}

/// (|0>_A|0>_R + |1>_A|1>_R) / sqrt 2
inline OccupationState bell_state() {
  const double h = 1.0 / std::numbers::sqrt2;
  return OccupationState(minkowski_registry(), {{0b00u, h}, {0b11u, h}});
}

/// Replace one Minkowski particle mode by its Rindler region-I particle and
/// region-II antiparticle modes.
struct Substitution {
  std::string mode;
  AccelParam r;
  RindlerPair pair;
};

/// Rewrites `state` for accelerated observers. Every term is read as a string of
/// Minkowski creation operators acting on the Minkowski vacuum; substituted
/// modes use the Bogoliubov-transformed a^dag and the solved Rindler vacuum.
inline OccupationState rindler_expand(const OccupationState& state,
                                      const std::vector<Substitution>& subs) {
  const auto& old_modes = state.registry().modes();
  auto find_sub = [&](const std::string& name) -> const Substitution* {
    for (const auto& s : subs)
      if (s.mode == name) return &s;
    return nullptr;
  };
  for (const auto& s : subs) {
    const auto& m = old_modes[state.registry().index_of(s.mode)];
    if (m.region != Region::minkowski || m.species != Species::particle)
      throw Error(ErrorCode::unsupported_state, "only Minkowski particle modes can be expanded");
  }

  std::vector<Mode> new_modes;
  for (const auto& m : old_modes) {
    if (const auto* s = find_sub(m.name)) {
      new_modes.push_back({s->pair.region_I, Species::particle, Region::rindler_I});
      new_modes.push_back({s->pair.region_II, Species::antiparticle, Region::rindler_II});
    } else {
      new_modes.push_back(m);
    }
  }
  const auto reg = make_registry(std::move(new_modes), state.registry().sign_rule());

  OccupationState vacuum = OccupationState::vacuum(reg);
  for (const auto& s : subs)
    vacuum = apply_operator_poly(creation_polynomial(solve_minkowski_vacuum(s.r.r(), s.pair)), vacuum);

  OccupationState out(reg);
  for (const auto& [bits, amp] : state.terms()) {
    OccupationState t = vacuum;
    for (std::size_t k = old_modes.size(); k-- > 0;) {
      if (!(bits & (Occupation{1} << k))) continue;
      if (const auto* s = find_sub(old_modes[k].name))
        t = apply_operator_poly(minkowski_creator(s->r.r(), s->pair), t);
      else
        t = apply_ladder(create(old_modes[k].name), t);
    }
    out.add(t, amp);
  }
  return out;
}

/// rho_{A,I,II}: Rob accelerates, Alice stays inertial. Basis |a>_A |b>_I |c>_II.
inline DensityMatrix accelerate(const OccupationState& state, const AccelParam& r) {
  const auto& reg = state.registry();
  if (!reg.contains("A") || !reg.contains("R"))
    throw Error(ErrorCode::unsupported_state, "state must carry Minkowski modes A and R");
  const Occupation allowed = (Occupation{1} << reg.index_of("A")) | (Occupation{1} << reg.index_of("R"));
  for (const auto& [bits, amp] : state.terms())
    if (bits & ~allowed)
      throw Error(ErrorCode::unsupported_state, "only modes A and R may be excited");
  const auto expanded = rindler_expand(state, {{"R", r, RindlerPair{"I", "II"}}});
  return to_density_matrix(expanded, SubsystemLayout{"A", "I", "II"});
}

/// Region-I marginal of the expanded single-mode vacuum: cos^2 r |0><0| + sin^2 r |1><1|.
inline DensityMatrix vacuum_marginal(const AccelParam& r) {
  const auto rho = to_density_matrix(solve_minkowski_vacuum(r.r()), SubsystemLayout{"I", "II"});
  return partial_trace(rho, {"I"});
}

/// <c^dag c> of region I in the expanded Minkowski vacuum.
inline double vacuum_particle_number(const AccelParam& r) {
  return expectation(number_operator("I"), solve_minkowski_vacuum(r.r())).real();
}

/// Both observers accelerate (Alice with r1, Rob with r2); both region-II
/// modes are traced out. Layout {A, I}.
inline DensityMatrix dual_acceleration(const AccelParam& r1, const AccelParam& r2) {
  const auto expanded = rindler_expand(bell_state(), {{"A", r1, RindlerPair{"A", "AII"}},
                                                      {"R", r2, RindlerPair{"I", "II"}}});
  const auto full = to_density_matrix(expanded, SubsystemLayout{"A", "I", "AII", "II"});
  return partial_trace(full, {"A", "I"});
}

/// The three two-mode marginals of rho_{A,I,II}.
struct Marginals {
  DensityMatrix a_i;
  DensityMatrix a_ii;
  DensityMatrix i_ii;
};

inline Marginals marginals(const DensityMatrix& rho_a_i_ii) {
  return {partial_trace(rho_a_i_ii, {"A", "I"}), partial_trace(rho_a_i_ii, {"A", "II"}),
          partial_trace(rho_a_i_ii, {"I", "II"})};
}

}  // namespace rqi
