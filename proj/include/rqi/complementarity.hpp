#pragma once

// Single-qubit information (coherence, predictability) and the two- and
// three-qubit complementarity identities built from them.

#include <cmath>
#include <string>
#include <vector>

#include "rqi/measures.hpp"
#include "rqi/qmat.hpp"

namespace rqi {

/// nu = 2 |Tr(rho sigma_+)| with sigma_+ = [[0, 1], [0, 0]], i.e. 2 |rho[1][0]|.
inline double coherence(const DensityMatrix& rho) {
  detail::require_qubits(rho, 1);
  return 2.0 * std::abs((rho.matrix() * pauli::plus()).trace());
}

/// p = |Tr(rho sigma_z)|
inline double predictability(const DensityMatrix& rho) {
  detail::require_qubits(rho, 1);
  return std::abs((rho.matrix() * pauli::z()).trace());
}

/// nu^2 + p^2, the squared Bloch vector length.
inline double single_qubit_information(const DensityMatrix& rho) {
  const double nu = coherence(rho), p = predictability(rho);
  return nu * nu + p * p;
}

/// S-bar^2 = (nu^2 + p^2) / 2
inline double sbar2(const DensityMatrix& rho) { return 0.5 * single_qubit_information(rho); }

/// M = 1 - Tr rho^2
inline double marginal_mixedness(const DensityMatrix& rho) {
  detail::require_qubits(rho, 2);
  return 1.0 - rho.purity();
}

/// Tr(rho rho~)
inline double spin_flip_overlap(const DensityMatrix& rho) {
  return (rho.matrix() * spin_flip(rho)).trace().real();
}

/// eta = Tr(rho rho~) + M - tau, reported unclamped.
inline double separable_uncertainty(const DensityMatrix& rho) {
  detail::require_qubits(rho, 2);
  return spin_flip_overlap(rho) + marginal_mixedness(rho) - tangle(rho);
}

/// eta + tau + S-bar^2(rho_a) + S-bar^2(rho_b) - 1; zero for every two-qubit state.
inline double check_two_qubit_relation(const DensityMatrix& rho) {
  detail::require_qubits(rho, 2);
  const auto& labels = rho.layout().labels();
  return separable_uncertainty(rho) + tangle(rho) + sbar2(partial_trace(rho, {labels[0]})) +
         sbar2(partial_trace(rho, {labels[1]})) - 1.0;
}

/// Total pairwise tangle tau^(k) = sum_{j != k} tau_{j,k}.
inline double pairwise_tangle_sum(const DensityMatrix& rho, const std::string& k) {
  double sum = 0.0;
  for (const auto& other : rho.layout().labels())
    if (other != k) sum += pair_tangle(rho, k, other);
  return sum;
}

/// tau_{abc} + tau^(k) + (nu_k^2 + p_k^2) - 1 for a pure three-qubit state.
///
/// The single-qubit term is the full squared Bloch length. With the halved
/// S-bar^2 the sum is 1 - (nu^2 + p^2)/2 rather than 1 (e.g. for |000>).
inline double check_pure_relation(const DensityMatrix& rho, const std::string& k) {
  detail::require_qubits(rho, 3);
  detail::require_pure(rho);
  return residual_tangle(rho, k) + pairwise_tangle_sum(rho, k) +
         single_qubit_information(partial_trace(rho, {k})) - 1.0;
}

/// M - eta; zero for maximally entangled states with fixed marginal mixedness.
inline double memms_gap(const DensityMatrix& rho) {
  return marginal_mixedness(rho) - separable_uncertainty(rho);
}

}  // namespace rqi
