#pragma once

// Closed-form reference expressions for the accelerated Bell state. These are
// the comparison targets of the verification suite; the numerical pipeline
// never calls them.

#include <cmath>

#include "rqi/qmat.hpp"

namespace rqi::closed_form {

inline double xlog2x(double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); }

/// Binary entropy in bits.
inline double binary_entropy(double x) { return -xlog2x(x) - xlog2x(1.0 - x); }

inline ComplexMatrix rho_a_i_ii(double r) {
  const double c = std::cos(r), s = std::sin(r);
  ComplexMatrix m(8);
  m(0, 0) = c * c;
  m(0, 3) = m(3, 0) = c * s;
  m(0, 6) = m(6, 0) = c;
  m(3, 3) = s * s;
  m(3, 6) = m(6, 3) = s;
  m(6, 6) = 1.0;
  return 0.5 * m;
}

inline ComplexMatrix rho_a_i(double r) {
  const double c = std::cos(r), s = std::sin(r);
  return ComplexMatrix(4, {c * c / 2, 0, 0, c / 2,  //
                           0, s * s / 2, 0, 0,      //
                           0, 0, 0, 0,              //
                           c / 2, 0, 0, 0.5});
}

inline ComplexMatrix rho_a_i_partial_transpose(double r) {
  const double c = std::cos(r), s = std::sin(r);
  return ComplexMatrix(4, {c * c / 2, 0, 0, 0,  //
                           0, s * s / 2, c / 2, 0,  //
                           0, c / 2, 0, 0,          //
                           0, 0, 0, 0.5});
}

inline ComplexMatrix rho_a_i_spin_flip(double r) {
  const double c = std::cos(r), s = std::sin(r);
  return ComplexMatrix(4, {0.5, 0, 0, c / 2,      //
                           0, 0, 0, 0,            //
                           0, 0, s * s / 2, 0,    //
                           c / 2, 0, 0, c * c / 2});
}

inline ComplexMatrix rho_a_ii(double r) {
  const double c = std::cos(r), s = std::sin(r);
  return ComplexMatrix(4, {c * c / 2, 0, 0, 0,      //
                           0, s * s / 2, s / 2, 0,  //
                           0, s / 2, 0.5, 0,        //
                           0, 0, 0, 0});
}

inline ComplexMatrix rho_i_ii(double r) {
  const double c = std::cos(r), s = std::sin(r);
  return ComplexMatrix(4, {c * c / 2, 0, 0, c * s / 2,  //
                           0, 0, 0, 0,                  //
                           0, 0, 0.5, 0,                //
                           c * s / 2, 0, 0, s * s / 2});
}

inline ComplexMatrix dual(double r1, double r2) {
  const double c1 = std::cos(r1), s1 = std::sin(r1), c2 = std::cos(r2), s2 = std::sin(r2);
  return ComplexMatrix(4, {c1 * c1 * c2 * c2 / 2, 0, 0, c1 * c2 / 2,  //
                           0, c1 * c1 * s2 * s2 / 2, 0, 0,            //
                           0, 0, s1 * s1 * c2 * c2 / 2, 0,            //
                           c1 * c2 / 2, 0, 0, (1 + s1 * s1 * s2 * s2) / 2});
}

// Partial-transpose minimum eigenvalues.
inline double lambda_min_a_i(double r) { return -0.5 * std::pow(std::cos(r), 2); }
inline double lambda_min_a_ii(double r) { return -0.5 * std::pow(std::sin(r), 2); }
inline double lambda_min_i_ii(double r) {
  return (1.0 - std::sqrt(1.0 + std::pow(std::sin(2 * r), 2))) / 4.0;
}

// Concurrences.
inline double concurrence_a_i(double r) { return std::cos(r); }
inline double concurrence_a_ii(double r) { return std::sin(r); }
inline double concurrence_i_ii(double r) { return std::sin(r) * std::cos(r); }

// Logarithmic negativities.
inline double log_negativity_a_i(double r) { return std::log2(1.0 + std::pow(std::cos(r), 2)); }
inline double log_negativity_a_ii(double r) { return std::log2(1.0 + std::pow(std::sin(r), 2)); }
inline double log_negativity_i_ii(double r) {
  return std::log2(0.5 * (1.0 + std::sqrt(1.0 + std::pow(std::sin(2 * r), 2))));
}
inline double log_negativity_dual(double r1, double r2) {
  return std::log2(1.0 + std::pow(std::cos(r1) * std::cos(r2), 2));
}

// Entanglement of formation, written out as displayed for each pair.
inline double eof_a_i(double r) {
  const double s = std::sin(r);
  return -0.5 * (1 + s) * std::log2((1 + s) / 2) - xlog2x((1 - s) / 2);
}
inline double eof_a_ii(double r) {
  const double c = std::cos(r);
  return -xlog2x((1 + c) / 2) - xlog2x((1 - c) / 2);
}
inline double eof_i_ii(double r) {
  const double q = std::sqrt(1.0 - std::pow(std::sin(r) * std::cos(r), 2));
  return -xlog2x((1 + q) / 2) - xlog2x((1 - q) / 2);
}

// Entropies of the single-mode marginals and of the pair marginals.
inline double entropy_i(double r) {
  const double c2 = std::pow(std::cos(r), 2);
  return -xlog2x(c2 / 2) - xlog2x(1 - c2 / 2);
}
inline double entropy_a_i(double r) {
  const double c2 = std::pow(std::cos(r), 2);
  return -xlog2x((1 + c2) / 2) - xlog2x((1 - c2) / 2);
}

// Mutual informations.
inline double mutual_information_a_i(double r) { return 1.0 + entropy_i(r) - entropy_a_i(r); }
inline double mutual_information_a_ii(double r) { return 1.0 + entropy_a_i(r) - entropy_i(r); }
inline double mutual_information_i_ii(double r) { return entropy_i(r) + entropy_a_i(r) - 1.0; }

}  // namespace rqi::closed_form
