#pragma once

// Dense complex linear algebra for the small (dim <= 8) matrices that carry
// qubit density operators.
//
// Bit-order convention: a SubsystemLayout with labels (L0, L1, ..., Ln-1)
// maps basis index i to the bit string b0 b1 ... bn-1 with b0 the most
// significant bit, so |abc> = |a>_L0 |b>_L1 |c>_L2 is index 4a + 2b + c.
// tensor() and every displayed matrix in this project use that order.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rqi/error.hpp"

namespace rqi {

using cplx = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
      : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_)
      throw Error(ErrorCode::dimension_mismatch,
                  "expected " + std::to_string(dim_ * dim_) + " entries, got " +
                      std::to_string(entries_.size()));
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::span<const cplx> entries() const noexcept { return entries_; }

  cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  ComplexMatrix conjugate() const {
    ComplexMatrix out(*this);
    for (auto& z : out.entries_) z = std::conj(z);
    return out;
  }

  ComplexMatrix transpose() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : entries_) s += std::norm(z);
    return std::sqrt(s);
  }

  /// Largest entrywise modulus of (this - other).
  double max_abs_diff(const ComplexMatrix& other) const {
    require_same_dim(other);
    double worst = 0.0;
    for (std::size_t k = 0; k < entries_.size(); ++k)
      worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
    return worst;
  }

  /// Largest |M[i][j] - conj(M[j][i])|.
  double hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
  }

  bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_dim(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_dim(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }
  ComplexMatrix& operator*=(cplx s) {
    for (auto& z : entries_) z *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.require_same_dim(b);
    const std::size_t n = a.dim_;
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  void require_same_dim(const ComplexMatrix& o) const {
    if (o.dim_ != dim_)
      throw Error(ErrorCode::dimension_mismatch,
                  std::to_string(dim_) + " vs " + std::to_string(o.dim_));
  }

  std::size_t dim_ = 0;
  std::vector<cplx> entries_;
};

/// Ordered qubit labels; the first label is the most significant bit.
class SubsystemLayout {
 public:
  SubsystemLayout() = default;

  explicit SubsystemLayout(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      for (std::size_t j = i + 1; j < labels_.size(); ++j)
        if (labels_[i] == labels_[j])
          throw Error(ErrorCode::unknown_subsystem, "duplicate label '" + labels_[i] + "'");
  }

  SubsystemLayout(std::initializer_list<std::string> labels)
      : SubsystemLayout(std::vector<std::string>(labels)) {}

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t total_dim() const noexcept { return std::size_t{1} << labels_.size(); }

  bool contains(const std::string& label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
  }

  std::size_t position(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw Error(ErrorCode::unknown_subsystem, "no subsystem '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  /// Bit shift of the named factor inside a basis index.
  std::size_t shift(const std::string& label) const { return labels_.size() - 1 - position(label); }

  friend bool operator==(const SubsystemLayout&, const SubsystemLayout&) = default;

 private:
  std::vector<std::string> labels_;
};

namespace detail {
inline constexpr double density_tol = 1e-10;
}

/// Hermitian, unit-trace matrix over a labeled qubit layout.
/// Positivity is checked by the consumers that need it (see is_psd()).
class DensityMatrix {
 public:
  DensityMatrix(SubsystemLayout layout, ComplexMatrix matrix)
      : layout_(std::move(layout)), matrix_(std::move(matrix)) {
    if (matrix_.dim() != layout_.total_dim())
      throw Error(ErrorCode::dimension_mismatch, "matrix dim " + std::to_string(matrix_.dim()) +
                                                     " does not match layout dim " +
                                                     std::to_string(layout_.total_dim()));
    if (matrix_.hermiticity_defect() > detail::density_tol)
      throw Error(ErrorCode::not_density_matrix, "matrix is not Hermitian");
    if (std::abs(matrix_.trace() - 1.0) > detail::density_tol)
      throw Error(ErrorCode::not_density_matrix, "trace differs from 1");
  }

  const SubsystemLayout& layout() const noexcept { return layout_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  std::size_t qubits() const noexcept { return layout_.size(); }
  const cplx& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  double purity() const { return (matrix_ * matrix_).trace().real(); }

 private:
  SubsystemLayout layout_;
  ComplexMatrix matrix_;
};

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

struct JacobiSettings {
  double off_diagonal_tol = 1e-14;  // relative to max(1, ||m||_F)
  int max_sweeps = 100;
};

namespace detail {

// Unitary acting on columns (p, q) that zeroes the (p, q) entry of the Hermitian
// 2x2 block [[app, apq], [conj(apq), aqq]]. Stored as the 2x2 block
// [[v_pp, v_pq], [v_qp, v_qq]].
struct Rotation {
  cplx pp, pq, qp, qq;
};

inline Rotation jacobi_rotation(double app, double aqq, cplx apq) {
  const double g = std::abs(apq);
  const cplx phase = apq / g;
  const double theta = (aqq - app) / (2.0 * g);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  return {c, s, -s * std::conj(phase), c * std::conj(phase)};
}

inline void rotate_columns(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& v) {
  for (std::size_t k = 0; k < m.dim(); ++k) {
    const cplx mp = m(k, p), mq = m(k, q);
    m(k, p) = mp * v.pp + mq * v.qp;
    m(k, q) = mp * v.pq + mq * v.qq;
  }
}

inline void rotate_rows_adjoint(ComplexMatrix& m, std::size_t p, std::size_t q, const Rotation& v) {
  for (std::size_t k = 0; k < m.dim(); ++k) {
    const cplx mp = m(p, k), mq = m(q, k);
    m(p, k) = std::conj(v.pp) * mp + std::conj(v.qp) * mq;
    m(q, k) = std::conj(v.pq) * mp + std::conj(v.qq) * mq;
  }
}

inline double off_diagonal_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

}  // namespace detail

/// Cyclic complex Jacobi diagonalization. Eigenvalues ascending.
inline EigenSystem eig_hermitian(const ComplexMatrix& m, JacobiSettings settings = {}) {
  if (!m.is_hermitian(1e-12)) throw Error(ErrorCode::not_hermitian, "eig_hermitian input");
  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = settings.off_diagonal_tol * std::max(1.0, m.frobenius_norm());

  bool converged = false;
  for (int sweep = 0; sweep <= settings.max_sweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) < threshold) {
      converged = true;
      break;
    }
    if (sweep == settings.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        if (std::abs(apq) == 0.0) continue;
        const auto rot = detail::jacobi_rotation(a(p, p).real(), a(q, q).real(), apq);
        detail::rotate_columns(a, p, q, rot);
        detail::rotate_rows_adjoint(a, p, q, rot);
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        detail::rotate_columns(v, p, q, rot);
      }
  }
  if (!converged)
    throw Error(ErrorCode::no_convergence,
                "Jacobi exceeded " + std::to_string(settings.max_sweeps) + " sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  EigenSystem out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

inline std::vector<double> eigenvalues(const ComplexMatrix& m) { return eig_hermitian(m).values; }

/// Singular values, descending, by one-sided (Hestenes) Jacobi. Zero singular
/// values come out at roundoff level rather than at its square root.
inline std::vector<double> singular_values(const ComplexMatrix& m, JacobiSettings settings = {}) {
  const std::size_t n = m.dim();
  ComplexMatrix x = m;
  constexpr double eps = 1e-15;
  bool converged = n < 2;
  for (int sweep = 0; sweep < settings.max_sweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0;
        cplx gamma = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          alpha += std::norm(x(k, p));
          beta += std::norm(x(k, q));
          gamma += std::conj(x(k, p)) * x(k, q);
        }
        if (std::abs(gamma) <= eps * std::sqrt(alpha * beta) || std::abs(gamma) == 0.0) continue;
        converged = false;
        detail::rotate_columns(x, p, q, detail::jacobi_rotation(alpha, beta, gamma));
      }
  }
  if (!converged) throw Error(ErrorCode::no_convergence, "one-sided Jacobi SVD");
  std::vector<double> s(n);
  for (std::size_t k = 0; k < n; ++k) {
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i) c += std::norm(x(i, k));
    s[k] = std::sqrt(c);
  }
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

/// V diag(f(lambda)) V^dagger for Hermitian m.
template <typename F>
ComplexMatrix hermitian_function(const ComplexMatrix& m, F&& f) {
  const auto es = eig_hermitian(m);
  const std::size_t n = m.dim();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(es.values[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += fk * es.vectors(i, k) * std::conj(es.vectors(j, k));
  }
  return out;
}

/// Principal square root of a PSD matrix; eigenvalues below `floor` count as 0.
inline ComplexMatrix sqrt_psd(const ComplexMatrix& m, double floor = 1e-12) {
  return hermitian_function(m, [floor](double x) { return x < floor ? 0.0 : std::sqrt(x); });
}

/// Kronecker product: (A (x) B)[i*db + k][j*db + l] = A[i][j] B[k][l].
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = a(i, j) * b(k, l);
  return out;
}

inline DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  auto labels = a.layout().labels();
  labels.insert(labels.end(), b.layout().labels().begin(), b.layout().labels().end());
  return {SubsystemLayout(std::move(labels)), tensor(a.matrix(), b.matrix())};
}

/// Traces out every subsystem not named in `keep`. The kept factors retain
/// their original relative order regardless of the order of `keep`.
inline DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep) {
  const auto& layout = rho.layout();
  if (keep.empty()) throw Error(ErrorCode::unknown_subsystem, "partial_trace needs a nonempty keep list");
  std::vector<bool> kept(layout.size(), false);
  for (const auto& label : keep) kept[layout.position(label)] = true;

  std::vector<std::string> kept_labels;
  std::vector<std::size_t> kept_shifts, traced_shifts;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const std::size_t shift = layout.size() - 1 - i;
    if (kept[i]) {
      kept_labels.push_back(layout.labels()[i]);
      kept_shifts.push_back(shift);
    } else {
      traced_shifts.push_back(shift);
    }
  }

  auto scatter = [](std::size_t value, const std::vector<std::size_t>& shifts) {
    std::size_t index = 0;
    for (std::size_t b = 0; b < shifts.size(); ++b)
      if ((value >> (shifts.size() - 1 - b)) & 1u) index |= std::size_t{1} << shifts[b];
    return index;
  };

  const std::size_t dk = std::size_t{1} << kept_shifts.size();
  const std::size_t dt = std::size_t{1} << traced_shifts.size();
  ComplexMatrix out(dk);
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = 0; j < dk; ++j) {
      cplx sum = 0.0;
      const std::size_t row = scatter(i, kept_shifts), col = scatter(j, kept_shifts);
      for (std::size_t t = 0; t < dt; ++t) {
        const std::size_t env = scatter(t, traced_shifts);
        sum += rho(row | env, col | env);
      }
      out(i, j) = sum;
    }
  return {SubsystemLayout(std::move(kept_labels)), std::move(out)};
}

/// Transposes the indices of one factor: |a b><c d| -> |c b><a d| for factor a.
inline ComplexMatrix partial_transpose(const DensityMatrix& rho, const std::string& subsystem) {
  const std::size_t bit = std::size_t{1} << rho.layout().shift(subsystem);
  const std::size_t n = rho.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t ti = (i & ~bit) | (j & bit);
      const std::size_t tj = (j & ~bit) | (i & bit);
      out(ti, tj) = rho(i, j);
    }
  return out;
}

/// Sum of |eigenvalue| of a Hermitian matrix.
inline double trace_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (double v : eigenvalues(m)) s += std::abs(v);
  return s;
}

inline bool is_psd(const DensityMatrix& rho, double tol = detail::density_tol) {
  return eigenvalues(rho.matrix()).front() >= -tol;
}

namespace pauli {
inline ComplexMatrix x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
inline ComplexMatrix y() { return ComplexMatrix(2, {0.0, cplx(0, -1), cplx(0, 1), 0.0}); }
inline ComplexMatrix z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }
/// Raising operator [[0, 1], [0, 0]].
inline ComplexMatrix plus() { return ComplexMatrix(2, {0.0, 1.0, 0.0, 0.0}); }
}  // namespace pauli

}  // namespace rqi
