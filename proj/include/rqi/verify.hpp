#pragma once

// End-to-end verification: every closed form, identity and oracle comparison
// the project promises, grouped into numbered criteria. Used by `rqi verify`
// and by the acceptance test binary.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rqi/closed_form.hpp"
#include "rqi/complementarity.hpp"
#include "rqi/fermion.hpp"
#include "rqi/measures.hpp"
#include "rqi/qmat.hpp"
#include "rqi/report.hpp"
#include "rqi/sweep.hpp"
#include "rqi/unruh.hpp"

namespace rqi::verify {

enum class Fault { none, drop_jordan_wigner_sign };

struct Options {
  double tol = 1e-10;  // criteria stated at 1e-10; stricter bounds are fixed
  Fault fault = Fault::none;
  std::filesystem::path scratch_dir = std::filesystem::temp_directory_path() / "rqi-verify";
  std::uint64_t seed = 20060217;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = true;
  double worst_ratio = 0.0;  // max deviation / tolerance over all sub-checks
  std::string first_failure;
  int checks = 0;
};

/// Collects sub-checks of one criterion.
class Tracker {
 public:
  Tracker(int id, std::string title) { result_.id = id; result_.title = std::move(title); }

  void check(const std::string& name, double deviation, double tol) {
    ++result_.checks;
    const bool ok = std::isfinite(deviation) && deviation <= tol;
    const double ratio = tol > 0 ? deviation / tol : (deviation == 0 ? 0.0 : INFINITY);
    if (!std::isfinite(deviation) || ratio > result_.worst_ratio) result_.worst_ratio = ratio;
    if (!ok && result_.passed) {
      result_.passed = false;
      std::ostringstream os;
      os << name << " (deviation " << deviation << ", tolerance " << tol << ")";
      result_.first_failure = os.str();
    }
  }

  void require(const std::string& name, bool ok) { check(name, ok ? 0.0 : 1.0, 0.0); }

  /// Runs `body`, turning an escaping exception into a failed sub-check.
  void guard(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++result_.checks;
      if (result_.passed) {
        result_.passed = false;
        result_.first_failure = name + " threw: " + e.what();
      }
      result_.worst_ratio = INFINITY;
    }
  }

  CriterionResult result() const { return result_; }

 private:
  CriterionResult result_;
};

/// r = k pi / 400, k = 0..100.
inline std::vector<double> acceptance_grid() {
  std::vector<double> r(101);
  for (int k = 0; k <= 100; ++k) r[k] = k * std::numbers::pi / 400.0;
  r.back() = quarter_pi;
  return r;
}

namespace detail {

inline std::string at(const std::string& what, double r) {
  std::ostringstream os;
  os << what << " at r=" << r;
  return os.str();
}

inline bool same_state_exactly(const OccupationState& a, const OccupationState& b) {
  return a.terms() == b.terms();
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = u(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = cplx(u(rng), u(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

inline ComplexMatrix random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  cplx a(g(rng), g(rng)), b(g(rng), g(rng));
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  a /= n;
  b /= n;
  const cplx phase = std::polar(1.0, std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng));
  return phase * ComplexMatrix(2, {a, -std::conj(b), b, std::conj(a)});
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace detail

inline CriterionResult concurrence_closed_forms(const Options& o) {
  Tracker t(1, "Concurrence closed forms over 101 r values");
  t.guard("concurrence", [&] {
    for (double r : acceptance_grid()) {
      const auto m = marginals(accelerate(bell_state(), AccelParam(r)));
      t.check(detail::at("C_AI - cos r", r), std::abs(concurrence(m.a_i) - closed_form::concurrence_a_i(r)), o.tol);
      t.check(detail::at("C_AII - sin r", r), std::abs(concurrence(m.a_ii) - closed_form::concurrence_a_ii(r)), o.tol);
      t.check(detail::at("C_III - sin r cos r", r),
              std::abs(concurrence(m.i_ii) - closed_form::concurrence_i_ii(r)), o.tol);
    }
  });
  return t.result();
}

inline CriterionResult infinite_acceleration_values(const Options& o) {
  Tracker t(2, "Infinite-acceleration values at r = pi/4");
  t.guard("r = pi/4", [&] {
    const auto m = marginals(accelerate(bell_state(), AccelParam::infinite()));
    t.check("C_AI - 1/sqrt2", std::abs(concurrence(m.a_i) - 1.0 / std::numbers::sqrt2), 1e-12);
    t.check("N_AI - log2(3/2)", std::abs(log_negativity(m.a_i) - std::log2(1.5)), 1e-12);
    t.check("I_AI - 1", std::abs(mutual_information(m.a_i) - 1.0), o.tol);
    t.check("I_III - 3/2 (2 - log2 3)",
            std::abs(mutual_information(m.i_ii) - 1.5 * (2.0 - std::log2(3.0))), o.tol);
  });
  return t.result();
}

inline CriterionResult partial_transpose_spectra(const Options& o) {
  Tracker t(3, "Partial-transpose minimal eigenvalues");
  t.guard("partial transpose", [&] {
    for (double r : acceptance_grid()) {
      const auto m = marginals(accelerate(bell_state(), AccelParam(r)));
      t.check(detail::at("lambda_min AI", r), std::abs(min_pt_eigenvalue(m.a_i) - closed_form::lambda_min_a_i(r)), o.tol);
      t.check(detail::at("lambda_min AII", r),
              std::abs(min_pt_eigenvalue(m.a_ii) - closed_form::lambda_min_a_ii(r)), o.tol);
      t.check(detail::at("lambda_min III", r),
              std::abs(min_pt_eigenvalue(m.i_ii) - closed_form::lambda_min_i_ii(r)), o.tol);
    }
  });
  return t.result();
}

inline CriterionResult residual_tangle_vanishes(const Options& o) {
  Tracker t(4, "Residual tangle vanishes; tau_A(I,II) = 1");
  t.guard("residual tangle", [&] {
    for (double r : acceptance_grid()) {
      const auto rho = accelerate(bell_state(), AccelParam(r));
      for (const char* focus : {"A", "I", "II"})
        t.check(detail::at(std::string("residual tangle focus ") + focus, r),
                std::abs(residual_tangle(rho, focus)), o.tol);
      t.check(detail::at("tau_A(I,II) - 1", r), std::abs(one_to_rest_tangle(rho, "A") - 1.0), 1e-12);
    }
  });
  return t.result();
}

inline CriterionResult complementarity_identities(const Options& o) {
  Tracker t(5, "Complementarity identities and MEMMS gap");
  t.guard("complementarity", [&] {
    for (double r : acceptance_grid()) {
      const auto rho = accelerate(bell_state(), AccelParam(r));
      const auto m = marginals(rho);
      const std::array<std::pair<const char*, const DensityMatrix*>, 3> pairs = {
          {{"AI", &m.a_i}, {"III", &m.i_ii}, {"AII", &m.a_ii}}};
      for (const auto& [name, pr] : pairs) {
        t.check(detail::at(std::string("two-qubit relation ") + name, r), std::abs(check_two_qubit_relation(*pr)), o.tol);
        t.check(detail::at(std::string("MEMMS gap ") + name, r), std::abs(memms_gap(*pr)), o.tol);
      }
      for (const char* k : {"A", "I", "II"}) {
        t.check(detail::at(std::string("pure relation focus ") + k, r), std::abs(check_pure_relation(rho, k)), o.tol);
        // Reduced form with the three-tangle dropped.
        const double reduced = pairwise_tangle_sum(rho, k) + single_qubit_information(partial_trace(rho, {k})) - 1.0;
        t.check(detail::at(std::string("reduced pure relation focus ") + k, r), std::abs(reduced), o.tol);
      }
    }
  });
  return t.result();
}

inline CriterionResult unruh_thermal_check(const Options&) {
  Tracker t(6, "Unruh thermal occupation <c^dag c> = sin^2 r = 1/(e^{2 pi Omega} + 1)");
  t.guard("thermal", [&] {
    for (double omega : {0.0, 0.1, 0.5, 1.0, 2.0, 5.0}) {
      const auto r = r_from_omega_ratio(omega);
      const double n = vacuum_particle_number(r);
      const double s2 = std::pow(std::sin(r.r()), 2);
      std::ostringstream name;
      name << "Omega=" << omega;
      t.check(name.str() + " <c^dag c> - sin^2 r", std::abs(n - s2), 1e-12);
      t.check(name.str() + " <c^dag c> - Fermi-Dirac", std::abs(n - fermi_dirac(omega)), 1e-12);
      t.check(name.str() + " fd_occupation", std::abs(fd_occupation(r) - fermi_dirac(omega)), 1e-12);
    }
  });
  return t.result();
}

inline CriterionResult fermionic_algebra(const Options& o) {
  Tracker t(7, "Fermionic algebra: anti-commutators, nilpotency, vacuum, one-particle state");
  t.guard("fermionic algebra", [&] {
    const auto rule = o.fault == Fault::drop_jordan_wigner_sign ? SignRule::none : SignRule::jordan_wigner;
    const auto reg = make_registry({{"A", Species::particle, Region::minkowski},
                                    {"I", Species::particle, Region::rindler_I},
                                    {"II", Species::antiparticle, Region::rindler_II}},
                                   rule);
    const std::vector<std::string> names = {"A", "I", "II"};
    for (Occupation bits = 0; bits < 8; ++bits) {
      const OccupationState ket(reg, {{bits, 1.0}});
      for (const auto& i : names)
        for (const auto& j : names) {
          auto anti = [&](const LadderOp& x, const LadderOp& y) {
            auto s = apply_ladder(x, apply_ladder(y, ket));
            s.add(apply_ladder(y, apply_ladder(x, ket)));
            return s;
          };
          const auto expected = i == j ? ket : OccupationState(reg);
          const std::string where = "on |" + std::to_string(bits) + ">";
          t.require("anti-commutator {c_" + i + ", c_" + j + "^dag} " + where,
                    detail::same_state_exactly(anti(annihilate(i), create(j)), expected));
          t.require("anti-commutator {c_" + i + ", c_" + j + "} " + where,
                    anti(annihilate(i), annihilate(j)).is_zero());
          t.require("anti-commutator {c_" + i + "^dag, c_" + j + "^dag} " + where,
                    anti(create(i), create(j)).is_zero());
        }
      for (const auto& i : names) {
        t.require("(c_" + i + "^dag)^2 = 0", apply_ladder(create(i), apply_ladder(create(i), ket)).is_zero());
        t.require("(c_" + i + ")^2 = 0", apply_ladder(annihilate(i), apply_ladder(annihilate(i), ket)).is_zero());
      }
    }

    const auto pair = rindler_registry();
    const auto vac = OccupationState::vacuum(pair);
    const auto dcd = apply_operator_poly({OperatorTerm{1.0, {annihilate("II"), create("I"), create("II")}}}, vac);
    auto minus_c = apply_ladder(create("I"), vac);
    t.require("transposition sign d c^dag d^dag |00> = -c^dag |00>",
              detail::same_state_exactly(dcd, minus_c.scale(-1.0)));

    for (int k = 0; k < 50; ++k) {
      const double r = quarter_pi * k / 49.0;
      const auto v = solve_minkowski_vacuum(r);
      t.check(detail::at("a_k |0_M> residual", r), apply_operator_poly(minkowski_annihilator(r), v).norm(), 1e-14);
      const auto one = minkowski_one_particle(r);
      const auto expected = OccupationState::basis(pair, {1, 0});
      t.check(detail::at("a_k^dag |0_M> - |1>_I|0>_II", r), one.distance(expected), 1e-14);
      t.check(detail::at("(a_k^dag)^2 |0_M>", r), apply_operator_poly(minkowski_creator(r), one).norm(), 1e-14);
    }
  });
  return t.result();
}

inline CriterionResult dual_observer(const Options&) {
  Tracker t(8, "Two accelerated observers: matrix and N(pi/4, pi/4)");
  t.guard("dual", [&] {
    for (int i = 0; i <= 10; ++i)
      for (int j = 0; j <= 10; ++j) {
        const double r1 = quarter_pi * i / 10.0, r2 = quarter_pi * j / 10.0;
        const auto rho = dual_acceleration(AccelParam(r1), AccelParam(r2));
        std::ostringstream name;
        name << "dual matrix at (" << r1 << ", " << r2 << ")";
        t.check(name.str(), rho.matrix().max_abs_diff(closed_form::dual(r1, r2)), 1e-12);
      }
    const auto rho = dual_acceleration(AccelParam::infinite(), AccelParam::infinite());
    t.check("N(pi/4, pi/4) - log2(5/4)", std::abs(log_negativity(rho) - std::log2(1.25)), 1e-12);
  });
  return t.result();
}

inline CriterionResult entropy_symmetries(const Options& o) {
  Tracker t(9, "Pure-state entropy symmetries S(k) = S(rest)");
  t.guard("entropies", [&] {
    for (double r : acceptance_grid()) {
      const auto rho = accelerate(bell_state(), AccelParam(r));
      const auto m = marginals(rho);
      t.check(detail::at("S(A) - S(I,II)", r), std::abs(vn_entropy(partial_trace(rho, {"A"})) - vn_entropy(m.i_ii)), o.tol);
      t.check(detail::at("S(I) - S(A,II)", r), std::abs(vn_entropy(partial_trace(rho, {"I"})) - vn_entropy(m.a_ii)), o.tol);
      t.check(detail::at("S(II) - S(A,I)", r), std::abs(vn_entropy(partial_trace(rho, {"II"})) - vn_entropy(m.a_i)), o.tol);
    }
  });
  return t.result();
}

inline CriterionResult property_suite(const Options& o) {
  Tracker t(10, "Properties: local-unitary invariance, eigensolver, partial trace, CSV determinism");
  std::mt19937_64 rng(o.seed);
  t.guard("local unitaries", [&] {
    const auto grid = acceptance_grid();
    std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
    for (int k = 0; k < 200; ++k) {
      const double r = grid[pick(rng)];
      const auto rho = marginals(accelerate(bell_state(), AccelParam(r))).a_i;
      const auto u = tensor(detail::random_su2(rng), detail::random_su2(rng));
      const DensityMatrix rotated(rho.layout(), u * rho.matrix() * u.adjoint());
      t.check(detail::at("concurrence under U1 (x) U2", r), std::abs(concurrence(rotated) - concurrence(rho)), o.tol);
      t.check(detail::at("log negativity under U1 (x) U2", r),
              std::abs(log_negativity(rotated) - log_negativity(rho)), o.tol);
    }
  });
  t.guard("eigensolver", [&] {
    std::uniform_int_distribution<std::size_t> dim(2, 8);
    for (int k = 0; k < 1000; ++k) {
      const auto m = detail::random_hermitian(dim(rng), rng);
      const auto es = eig_hermitian(m);
      std::vector<double> lambda = es.values;
      const auto rebuilt = es.vectors * ComplexMatrix::diagonal(lambda) * es.vectors.adjoint();
      t.check("eigen reconstruction #" + std::to_string(k), rebuilt.max_abs_diff(m), 1e-12);
      t.check("eigenvector unitarity #" + std::to_string(k),
              (es.vectors.adjoint() * es.vectors).max_abs_diff(ComplexMatrix::identity(m.dim())), 1e-12);
    }
  });
  t.guard("partial trace composition", [&] {
    for (double r : acceptance_grid()) {
      const auto rho = accelerate(bell_state(), AccelParam(r));
      const auto stepwise = partial_trace(partial_trace(rho, {"A", "I"}), {"A"});
      const auto direct = partial_trace(rho, {"A"});
      t.check(detail::at("Tr_I Tr_II - Tr_{I,II}", r), stepwise.matrix().max_abs_diff(direct.matrix()), 1e-12);
    }
  });
  t.guard("CSV determinism", [&] {
    SweepConfig cfg;
    const auto dir_a = o.scratch_dir / "run-a", dir_b = o.scratch_dir / "run-b";
    cfg.out_dir = dir_a;
    const auto first = run_sweep(cfg);
    cfg.out_dir = dir_b;
    const auto second = run_sweep(cfg);
    for (std::size_t k = 0; k < first.size(); ++k)
      t.require("byte-identical " + first[k].filename().string(),
                detail::read_file(first[k]) == detail::read_file(second[k]) && !detail::read_file(first[k]).empty());
    std::error_code ec;
    std::filesystem::remove_all(o.scratch_dir, ec);
  });
  return t.result();
}

inline std::vector<CriterionResult> run_acceptance(const Options& o = {}) {
  return {concurrence_closed_forms(o),   infinite_acceleration_values(o), partial_transpose_spectra(o),
          residual_tangle_vanishes(o),   complementarity_identities(o),   unruh_thermal_check(o),
          fermionic_algebra(o),          dual_observer(o),                entropy_symmetries(o),
          property_suite(o)};
}

inline bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

/// One line per criterion: "PASS [ 1] title (n checks, worst/tol = x)".
inline std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " [" << (r.id < 10 ? " " : "") << r.id << "] " << r.title << " ("
     << r.checks << " checks, worst deviation/tolerance = " << r.worst_ratio << ")";
  if (!r.passed) os << "\n       first failure: " << r.first_failure;
  return os.str();
}

}  // namespace rqi::verify
