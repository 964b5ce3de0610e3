#include <cmath>
#include <limits>
#include <numbers>

#include "catch_amalgamated.hpp"
#include "rqi/unruh.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace rqi;

namespace {

constexpr double pi = std::numbers::pi;

template <class F>
void expect_code(F&& fn, ErrorCode code) {
  try {
    fn();
    FAIL("expected " << to_string(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

// (cos r |000> + sin r |011> + |110>) / sqrt 2 over (A, I, II)
ComplexMatrix expected_three_mode(double r) {
  std::vector<cplx> psi(8);
  psi[0] = std::cos(r) / std::numbers::sqrt2;
  psi[3] = std::sin(r) / std::numbers::sqrt2;
  psi[6] = 1.0 / std::numbers::sqrt2;
  ComplexMatrix m(8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  return m;
}

// Alice-Rob state when both accelerate, written out by multiplying the two
// single-mode expansions |1> -> |10>, |0> -> cos|00> + sin|11>.
ComplexMatrix expected_dual(double r1, double r2) {
  const double c1 = std::cos(r1), s1 = std::sin(r1), c2 = std::cos(r2), s2 = std::sin(r2);
  ComplexMatrix m(4);
  m(0, 0) = c1 * c1 * c2 * c2;
  m(1, 1) = c1 * c1 * s2 * s2;
  m(2, 2) = s1 * s1 * c2 * c2;
  m(3, 3) = 1 + s1 * s1 * s2 * s2;
  m(0, 3) = m(3, 0) = c1 * c2;
  return 0.5 * m;
}

}  // namespace

TEST_CASE("Unruh temperature at one standard gravity") {
  const double a = 9.80665;
  const double expect = 1.054571817e-34 * a / (2 * pi * 299792458.0 * 1.380649e-23);
  const double t = unruh_temperature(PhysicalParams{1.0, a});
  CHECK_THAT(t, WithinRel(expect, 1e-14));
  CHECK_THAT(t, WithinRel(3.978e-20, 1e-3));
}

TEST_CASE("Omega maps to r through tan r = exp(-pi Omega)") {
  CHECK_THAT(r_from_omega_ratio(1.0).r(), WithinAbs(0.0431870, 1e-7));
  CHECK_THAT(std::tan(r_from_omega_ratio(1.0).r()), WithinAbs(0.0432139, 1e-7));
  CHECK_THAT(r_from_omega_ratio(1.0).r(), WithinAbs(std::atan(std::exp(-pi)), 1e-16));
  CHECK(r_from_omega_ratio(0.0).r() == quarter_pi);
  CHECK(r_from_omega_ratio(std::numeric_limits<double>::infinity()).r() == 0.0);
  for (double omega : {0.01, 0.1, 0.5, 2.0, 5.0}) {
    const auto r = r_from_omega_ratio(omega);
    CHECK_THAT(r.omega_ratio(), WithinRel(omega, 1e-12));
    CHECK_THAT(AccelParam(r.r()).omega_ratio(), WithinRel(omega, 1e-12));
  }
  CHECK(std::isinf(AccelParam::inertial().omega_ratio()));
  CHECK_THAT(AccelParam::infinite().omega_ratio(), WithinAbs(0.0, 1e-15));
}

TEST_CASE("physical parameters round trip") {
  const PhysicalParams p{2.0e15, 1.0e22};
  const auto r = accel_param(p);
  CHECK_THAT(r.omega_ratio(), WithinRel(omega_ratio(p), 1e-12));
  CHECK_THAT(acceleration_for(r, p.omega), WithinRel(p.accel, 1e-10));
  CHECK(accel_param(PhysicalParams{1.0, 0.0}).r() == 0.0);
  expect_code([] { validate(PhysicalParams{-1.0, 1.0}); }, ErrorCode::out_of_range);
  expect_code([] { validate(PhysicalParams{1.0, -1.0}); }, ErrorCode::out_of_range);
}

TEST_CASE("invalid parameters are rejected") {
  expect_code([] { AccelParam(-0.01); }, ErrorCode::out_of_range);
  expect_code([] { AccelParam(quarter_pi + 1e-9); }, ErrorCode::out_of_range);
  expect_code([] { AccelParam(std::numeric_limits<double>::quiet_NaN()); }, ErrorCode::out_of_range);
  expect_code([] { r_from_omega_ratio(-1.0); }, ErrorCode::negative_omega);
  expect_code([] { r_from_omega_ratio(std::numeric_limits<double>::quiet_NaN()); }, ErrorCode::negative_omega);
  CHECK(to_string(ErrorCode::out_of_range) == std::string("InvalidRange"));
}

TEST_CASE("vacuum occupation is Fermi-Dirac") {
  for (double omega : {0.0, 0.05, 0.2, 0.5, 1.0, 3.0}) {
    const auto r = r_from_omega_ratio(omega);
    const double fd = 1.0 / (std::exp(2 * pi * omega) + 1.0);
    CHECK_THAT(fd_occupation(r), WithinAbs(fd, 1e-12));
    CHECK_THAT(vacuum_particle_number(r), WithinAbs(fd, 1e-12));
    const auto rho = vacuum_marginal(r);
    CHECK_THAT(rho(1, 1).real(), WithinAbs(fd, 1e-12));
    CHECK_THAT(rho(0, 0).real(), WithinAbs(1 - fd, 1e-12));
    CHECK(std::abs(rho(0, 1)) < 1e-15);
  }
  CHECK(fd_occupation(AccelParam::infinite()) == Catch::Approx(0.5));
}

TEST_CASE("accelerated Bell state matches the expanded state vector") {
  for (int k = 0; k <= 20; ++k) {
    const double r = k * quarter_pi / 20;
    const auto rho = accelerate(bell_state(), AccelParam(r));
    CHECK(rho.layout().labels() == std::vector<std::string>{"A", "I", "II"});
    CHECK(rho.matrix().max_abs_diff(expected_three_mode(r)) < 1e-12);
    CHECK_THAT(rho.purity(), WithinAbs(1.0, 1e-12));
  }
}

TEST_CASE("two-mode marginals") {
  const double r = 0.37, c = std::cos(r), s = std::sin(r);
  const auto m = marginals(accelerate(bell_state(), AccelParam(r)));
  const ComplexMatrix a_ii(4, {c * c / 2, 0, 0, 0, 0, s * s / 2, s / 2, 0, 0, s / 2, 0.5, 0, 0, 0, 0, 0});
  const ComplexMatrix i_ii(4, {c * c / 2, 0, 0, c * s / 2, 0, 0, 0, 0, 0, 0, 0.5, 0, c * s / 2, 0, 0, s * s / 2});
  CHECK(m.a_ii.matrix().max_abs_diff(a_ii) < 1e-12);
  CHECK(m.i_ii.matrix().max_abs_diff(i_ii) < 1e-12);
  CHECK(m.a_i.matrix().max_abs_diff(expected_dual(0.0, r)) < 1e-12);
}

TEST_CASE("both observers accelerating") {
  for (double r1 : {0.0, 0.3, quarter_pi})
    for (double r2 : {0.0, 0.5, quarter_pi}) {
      const auto rho = dual_acceleration(AccelParam(r1), AccelParam(r2));
      CHECK(rho.matrix().max_abs_diff(expected_dual(r1, r2)) < 1e-12);
    }
  const auto inf = dual_acceleration(AccelParam::infinite(), AccelParam::infinite());
  CHECK_THAT(inf(0, 0).real(), WithinAbs(0.125, 1e-12));
  CHECK_THAT(inf(3, 3).real(), WithinAbs(0.625, 1e-12));
  CHECK_THAT(inf(0, 3).real(), WithinAbs(0.25, 1e-12));
}

TEST_CASE("only Bell-type states of A and R are accepted") {
  const auto other = make_registry({{"A"}, {"B"}});
  expect_code([&] { accelerate(OccupationState::vacuum(other), AccelParam(0.1)); }, ErrorCode::unsupported_state);
  const auto extra = make_registry({{"A"}, {"R"}, {"X"}});
  expect_code([&] { accelerate(OccupationState::basis(extra, {0, 0, 1}), AccelParam(0.1)); },
              ErrorCode::unsupported_state);
  // an extra mode that stays empty is harmless
  const auto rho = accelerate(OccupationState::basis(extra, {1, 1, 0}), AccelParam(0.2));
  CHECK_THAT(rho(6, 6).real(), WithinAbs(1.0, 1e-14));
}
