#pragma once

// Everything measured at one value of r, assembled from the full numerical
// pipeline (Fock algebra -> density matrices -> measures).

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rqi/complementarity.hpp"
#include "rqi/measures.hpp"
#include "rqi/unruh.hpp"

namespace rqi {

struct PairMeasures {
  double min_pt_eigenvalue = 0;
  double log_negativity = 0;
  double concurrence = 0;
  double tangle = 0;
  double eof = 0;
  double mutual_information = 0;
};

inline PairMeasures measure_pair(const DensityMatrix& rho) {
  PairMeasures m;
  m.min_pt_eigenvalue = min_pt_eigenvalue(rho);
  m.log_negativity = log_negativity(rho);
  m.concurrence = concurrence(rho);
  m.tangle = m.concurrence * m.concurrence;
  m.eof = eof_from_concurrence(m.concurrence);
  m.mutual_information = mutual_information(rho);
  return m;
}

/// Pair keys in figure column order.
enum class Pair { a_i, i_ii, a_ii };
inline constexpr std::array<Pair, 3> all_pairs = {Pair::a_i, Pair::i_ii, Pair::a_ii};

constexpr std::string_view pair_key(Pair p) {
  switch (p) {
    case Pair::a_i: return "AI";
    case Pair::i_ii: return "III";
    case Pair::a_ii: return "AII";
  }
  return "";
}

struct MeasureReport {
  double r = 0;
  PairMeasures a_i, i_ii, a_ii;
  double s_a = 0, s_i = 0, s_ii = 0;  // single-mode entropies of the pure state
  double tau_a_rest = 0;              // tau_{A(I,II)}
  double residual_tangle = 0;         // focus A

  const PairMeasures& pair(Pair p) const {
    return p == Pair::a_i ? a_i : p == Pair::i_ii ? i_ii : a_ii;
  }
};

struct QubitInfo {
  double nu = 0, p = 0, sbar2 = 0;
};

struct PairComplementarity {
  double eta = 0, tau = 0, mixedness = 0;
  double two_qubit_residual = 0;  // eta + tau + sbar2_a + sbar2_b - 1
  double memms_gap = 0;           // M - eta
};

struct ComplementarityReport {
  double r = 0;
  QubitInfo a, i, ii;
  PairComplementarity a_i, i_ii, a_ii;
  double pure_residual_a = 0, pure_residual_i = 0, pure_residual_ii = 0;

  const PairComplementarity& pair(Pair p) const {
    return p == Pair::a_i ? a_i : p == Pair::i_ii ? i_ii : a_ii;
  }
};

struct PointEvaluation {
  MeasureReport measures;
  ComplementarityReport complementarity;
};

namespace detail {
inline QubitInfo qubit_info(const DensityMatrix& rho) {
  return {coherence(rho), predictability(rho), sbar2(rho)};
}

inline PairComplementarity pair_complementarity(const DensityMatrix& rho, double tau) {
  PairComplementarity c;
  c.mixedness = marginal_mixedness(rho);
  c.tau = tau;
  c.eta = spin_flip_overlap(rho) + c.mixedness - tau;
  c.two_qubit_residual = check_two_qubit_relation(rho);
  c.memms_gap = c.mixedness - c.eta;
  return c;
}
}  // namespace detail

inline PointEvaluation evaluate_point(const AccelParam& r) {
  const auto rho = accelerate(bell_state(), r);
  const auto m2 = marginals(rho);
  const auto rho_a = partial_trace(rho, {"A"});
  const auto rho_i = partial_trace(rho, {"I"});
  const auto rho_ii = partial_trace(rho, {"II"});

  PointEvaluation out;
  auto& mr = out.measures;
  mr.r = r.r();
  mr.a_i = measure_pair(m2.a_i);
  mr.i_ii = measure_pair(m2.i_ii);
  mr.a_ii = measure_pair(m2.a_ii);
  mr.s_a = vn_entropy(rho_a);
  mr.s_i = vn_entropy(rho_i);
  mr.s_ii = vn_entropy(rho_ii);
  mr.tau_a_rest = one_to_rest_tangle(rho, "A");
  mr.residual_tangle = residual_tangle(rho, "A");

  auto& cr = out.complementarity;
  cr.r = r.r();
  cr.a = detail::qubit_info(rho_a);
  cr.i = detail::qubit_info(rho_i);
  cr.ii = detail::qubit_info(rho_ii);
  cr.a_i = detail::pair_complementarity(m2.a_i, mr.a_i.tangle);
  cr.i_ii = detail::pair_complementarity(m2.i_ii, mr.i_ii.tangle);
  cr.a_ii = detail::pair_complementarity(m2.a_ii, mr.a_ii.tangle);
  cr.pure_residual_a = check_pure_relation(rho, "A");
  cr.pure_residual_i = check_pure_relation(rho, "I");
  cr.pure_residual_ii = check_pure_relation(rho, "II");
  return out;
}

/// Ordered key/value view of a point evaluation, used for text output.
inline std::vector<std::pair<std::string, double>> key_values(const PointEvaluation& ev) {
  const auto& m = ev.measures;
  const auto& c = ev.complementarity;
  std::vector<std::pair<std::string, double>> kv = {
      {"r", m.r}, {"S_A", m.s_a}, {"S_I", m.s_i}, {"S_II", m.s_ii}};
  for (Pair p : all_pairs) {
    const std::string k(pair_key(p));
    const auto& pm = m.pair(p);
    kv.emplace_back("lambda_min_" + k, pm.min_pt_eigenvalue);
    kv.emplace_back("N_" + k, pm.log_negativity);
    kv.emplace_back("C_" + k, pm.concurrence);
    kv.emplace_back("tau_" + k, pm.tangle);
    kv.emplace_back("EF_" + k, pm.eof);
    kv.emplace_back("I_" + k, pm.mutual_information);
  }
  kv.emplace_back("tau_A_rest", m.tau_a_rest);
  kv.emplace_back("residual_tangle", m.residual_tangle);
  const std::array<std::pair<const char*, const QubitInfo*>, 3> qubits = {
      {{"A", &c.a}, {"I", &c.i}, {"II", &c.ii}}};
  for (const auto& [name, q] : qubits) {
    kv.emplace_back(std::string("nu_") + name, q->nu);
    kv.emplace_back(std::string("p_") + name, q->p);
    kv.emplace_back(std::string("sbar2_") + name, q->sbar2);
  }
  for (Pair p : all_pairs) {
    const std::string k(pair_key(p));
    const auto& pc = c.pair(p);
    kv.emplace_back("eta_" + k, pc.eta);
    kv.emplace_back("M_" + k, pc.mixedness);
    kv.emplace_back("complementarity_residual_" + k, pc.two_qubit_residual);
    kv.emplace_back("memms_gap_" + k, pc.memms_gap);
  }
  kv.emplace_back("pure_residual_A", c.pure_residual_a);
  kv.emplace_back("pure_residual_I", c.pure_residual_i);
  kv.emplace_back("pure_residual_II", c.pure_residual_ii);
  return kv;
}

struct DualReport {
  double r1 = 0, r2 = 0;
  ComplexMatrix rho;
  double log_negativity = 0, min_pt_eigenvalue = 0, concurrence = 0;
};

inline DualReport evaluate_dual(const AccelParam& r1, const AccelParam& r2) {
  const auto rho = dual_acceleration(r1, r2);
  return {r1.r(), r2.r(), rho.matrix(), log_negativity(rho), min_pt_eigenvalue(rho), concurrence(rho)};
}

}  // namespace rqi
