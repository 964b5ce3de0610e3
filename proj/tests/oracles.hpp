#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// the Jacobi eigensolver or the library's partial trace.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "rqi/qmat.hpp"

namespace oracle {

using rqi::ComplexMatrix;
using rqi::cplx;

/// Number of eigenvalues of Hermitian m below x (Sylvester inertia of m - x I,
/// counted from the pivots of Gaussian elimination without pivoting).
inline int count_below(const ComplexMatrix& m, double x) {
  const std::size_t n = m.dim();
  std::vector<cplx> a(m.entries().begin(), m.entries().end());
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] -= x;
  int negatives = 0;
  for (std::size_t k = 0; k < n; ++k) {
    double pivot = a[k * n + k].real();
    if (pivot == 0.0) pivot = -1e-300;
    if (pivot < 0) ++negatives;
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx f = a[i * n + k] / pivot;
      for (std::size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return negatives;
}

/// Eigenvalues (ascending) by bisection on the inertia count.
inline std::vector<double> eigenvalues_by_bisection(const ComplexMatrix& m) {
  const double bound = m.frobenius_norm() + 1.0;
  std::vector<double> out;
  for (int k = 0; k < static_cast<int>(m.dim()); ++k) {
    double lo = -bound, hi = bound;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (count_below(m, mid) > k ? hi : lo) = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

/// Monic characteristic polynomial det(x I - m) by Faddeev-LeVerrier;
/// coefficients from x^n down to x^0.
inline std::vector<cplx> characteristic_polynomial(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<cplx> c(n + 1);
  c[0] = 1.0;
  ComplexMatrix mk(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    ComplexMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[k - 1];
    mk = next;
    c[k] = -(m * mk).trace() / static_cast<double>(k);
  }
  return c;
}

inline cplx horner(const std::vector<cplx>& c, cplx x) {
  cplx v = 0.0;
  for (const auto& ck : c) v = v * x + ck;
  return v;
}

/// All roots of a monic polynomial by Durand-Kerner, polished with Newton steps.
inline std::vector<cplx> polynomial_roots(const std::vector<cplx>& c) {
  const std::size_t n = c.size() - 1;
  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = std::pow(cplx(0.4, 0.9), static_cast<double>(k));
  for (int it = 0; it < 2000; ++it) {
    double change = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      cplx denom = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) denom *= z[k] - z[j];
      const cplx step = horner(c, z[k]) / denom;
      z[k] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-18) break;
  }
  std::vector<cplx> dc;
  for (std::size_t k = 0; k < n; ++k) dc.push_back(c[k] * static_cast<double>(n - k));
  for (auto& root : z)
    for (int it = 0; it < 5; ++it) {
      const cplx d = horner(dc, root);
      if (std::abs(d) < 1e-300) break;
      root -= horner(c, root) / d;
    }
  return z;
}

/// Wootters lambdas straight from the characteristic polynomial of rho * rho~.
inline std::vector<double> wootters_lambdas_by_charpoly(const ComplexMatrix& rho) {
  const ComplexMatrix y(2, {0.0, cplx(0, -1), cplx(0, 1), 0.0});
  ComplexMatrix yy(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) yy(2 * i + k, 2 * j + l) = y(i, j) * y(k, l);
  const auto product = rho * (yy * rho.conjugate() * yy);
  std::vector<double> lambdas;
  for (const auto& root : polynomial_roots(characteristic_polynomial(product)))
    lambdas.push_back(std::sqrt(std::max(0.0, root.real())));
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return lambdas;
}

/// Three-qubit partial trace by explicit index loops, basis |abc> = 4a + 2b + c.
/// keep_mask selects the kept qubits as bits (4 = first, 2 = second, 1 = third).
inline ComplexMatrix partial_trace_3q(const ComplexMatrix& rho, int keep_mask) {
  std::vector<int> kept, traced;
  for (int q : {4, 2, 1}) (keep_mask & q ? kept : traced).push_back(q);
  const std::size_t dk = std::size_t{1} << kept.size();
  ComplexMatrix out(dk);
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = 0; j < dk; ++j)
      for (std::size_t t = 0; t < (std::size_t{1} << traced.size()); ++t) {
        int row = 0, col = 0, env = 0;
        for (std::size_t b = 0; b < kept.size(); ++b) {
          const std::size_t sh = kept.size() - 1 - b;
          if ((i >> sh) & 1) row |= kept[b];
          if ((j >> sh) & 1) col |= kept[b];
        }
        for (std::size_t b = 0; b < traced.size(); ++b)
          if ((t >> (traced.size() - 1 - b)) & 1) env |= traced[b];
        out(i, j) += rho(row | env, col | env);
      }
  return out;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = cplx(g(rng), g(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

inline std::vector<cplx> random_pure_state(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> v(n);
  double norm = 0.0;
  for (auto& z : v) {
    z = cplx(g(rng), g(rng));
    norm += std::norm(z);
  }
  for (auto& z : v) z /= std::sqrt(norm);
  return v;
}

/// Convex mixture of `count` random pure states with random weights.
inline ComplexMatrix random_mixed_state(std::size_t n, int count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> w(count);
  double total = 0.0;
  for (auto& x : w) total += (x = u(rng));
  ComplexMatrix rho(n);
  for (int k = 0; k < count; ++k) {
    const auto v = random_pure_state(n, rng);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rho(i, j) += w[k] / total * v[i] * std::conj(v[j]);
  }
  return rho;
}

inline ComplexMatrix random_unitary_2(std::mt19937_64& rng) {
  const auto v = random_pure_state(2, rng);
  const cplx phase = std::polar(1.0, std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng));
  return phase * ComplexMatrix(2, {v[0], -std::conj(v[1]), v[1], std::conj(v[0])});
}

}  // namespace oracle
