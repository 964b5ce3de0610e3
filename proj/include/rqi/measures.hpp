#pragma once

// Entanglement and correlation measures for qubit density matrices. All
// entropies are in bits.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "rqi/error.hpp"
#include "rqi/qmat.hpp"

namespace rqi {

namespace detail {

inline void require_qubits(const DensityMatrix& rho, std::size_t n) {
  if (rho.qubits() == n) return;
  const auto code = n == 1 ? ErrorCode::not_one_qubit
                  : n == 2 ? ErrorCode::not_two_qubit
                           : ErrorCode::dimension_mismatch;
  throw Error(code, "layout has " + std::to_string(rho.qubits()) + " qubits");
}

inline void require_pure(const DensityMatrix& rho) {
  if (std::abs(rho.purity() - 1.0) > 1e-10) throw Error(ErrorCode::not_pure, "Tr rho^2 != 1");
}

inline constexpr double psd_tol = 1e-10;
inline constexpr double eigen_clamp = 1e-12;

}  // namespace detail

/// S = -sum lambda log2 lambda, with 0 log 0 = 0.
inline double vn_entropy(const DensityMatrix& rho) {
  const auto lambda = eigenvalues(rho.matrix());
  if (lambda.front() < -detail::psd_tol)
    throw Error(ErrorCode::not_density_matrix, "negative eigenvalue " + std::to_string(lambda.front()));
  double s = 0.0;
  for (double l : lambda) {
    if (l < 0.0 && l >= -detail::eigen_clamp) l = 0.0;
    if (l > 0.0) s -= l * std::log2(l);
  }
  return s;
}

/// Smallest eigenvalue of the transpose on the first qubit; negative means entangled.
inline double min_pt_eigenvalue(const DensityMatrix& rho) {
  detail::require_qubits(rho, 2);
  return eigenvalues(partial_transpose(rho, rho.layout().labels().front())).front();
}

/// N = log2 || rho^T ||_1
inline double log_negativity(const DensityMatrix& rho) {
  detail::require_qubits(rho, 2);
  return std::log2(trace_norm(partial_transpose(rho, rho.layout().labels().front())));
}

inline const ComplexMatrix& sigma_y_sigma_y() {
  static const ComplexMatrix yy = tensor(pauli::y(), pauli::y());
  return yy;
}

/// (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y)
inline ComplexMatrix spin_flip(const DensityMatrix& rho) {
  detail::require_qubits(rho, 2);
  const auto& yy = sigma_y_sigma_y();
  return yy * rho.matrix().conjugate() * yy;
}

/// Square roots of the eigenvalues of rho * spin_flip(rho), descending.
///
/// rho rho~ has the spectrum of sqrt(rho) rho~ sqrt(rho) = X X^dag with
/// X = sqrt(rho) sqrt(rho~), so the values are the singular values of X. Taking
/// them directly avoids square-rooting roundoff-level eigenvalues.
inline std::array<double, 4> wootters_lambdas(const DensityMatrix& rho) {
  detail::require_qubits(rho, 2);
  const auto root = sqrt_psd(rho.matrix(), detail::eigen_clamp);
  const auto& yy = sigma_y_sigma_y();
  const auto root_flipped = yy * root.conjugate() * yy;
  const auto sv = singular_values(root * root_flipped);
  return {sv[0], sv[1], sv[2], sv[3]};
}

/// C = max(0, l1 - l2 - l3 - l4)
inline double concurrence(const DensityMatrix& rho) {
  const auto l = wootters_lambdas(rho);
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

inline double tangle(const DensityMatrix& rho) {
  const double c = concurrence(rho);
  return c * c;
}

/// Entanglement of formation from the concurrence.
inline double eof_from_concurrence(double c) {
  const double q = std::sqrt(std::max(0.0, 1.0 - c * c));
  const double x = (1.0 + q) / 2.0;
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (1.0 - x > 0.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

inline double eof(const DensityMatrix& rho) { return eof_from_concurrence(concurrence(rho)); }

/// I = S(rho_a) + S(rho_b) - S(rho_ab)
inline double mutual_information(const DensityMatrix& rho) {
  detail::require_qubits(rho, 2);
  const auto& labels = rho.layout().labels();
  return vn_entropy(partial_trace(rho, {labels[0]})) + vn_entropy(partial_trace(rho, {labels[1]})) -
         vn_entropy(rho);
}

/// Tangle between qubit k and the rest of a pure state: 2 (1 - Tr rho_rest^2).
inline double one_to_rest_tangle(const DensityMatrix& rho, const std::string& k) {
  detail::require_pure(rho);
  rho.layout().position(k);
  std::vector<std::string> rest;
  for (const auto& label : rho.layout().labels())
    if (label != k) rest.push_back(label);
  if (rest.empty()) return 0.0;
  return 2.0 * (1.0 - partial_trace(rho, rest).purity());
}

/// Two-qubit tangle between the named qubits of a larger state.
inline double pair_tangle(const DensityMatrix& rho, const std::string& a, const std::string& b) {
  return tangle(partial_trace(rho, {a, b}));
}

/// tau_{k(rest)} - sum_j tau_{k,j} for a pure three-qubit state.
inline double residual_tangle(const DensityMatrix& rho, const std::string& focus) {
  detail::require_qubits(rho, 3);
  detail::require_pure(rho);
  double value = one_to_rest_tangle(rho, focus);
  for (const auto& other : rho.layout().labels())
    if (other != focus) value -= pair_tangle(rho, focus, other);
  return value;
}

}  // namespace rqi
