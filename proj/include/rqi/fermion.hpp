#pragma once

// Fermionic Fock space over a finite, ordered set of named modes.
//
// A basis ket is stored as a bitmask (bit k <-> registry mode k) and stands for
//   (c_{m0}^dag)^{n0} (c_{m1}^dag)^{n1} ... |vac>
// with operators written in registry order. Applying c_k or c_k^dag to such a
// ket therefore picks up (-1)^(number of occupied modes before k), which is the
// Jordan-Wigner realization of {c_i, c_j^dag} = delta_ij.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rqi/error.hpp"
#include "rqi/qmat.hpp"

namespace rqi {

enum class Species { particle, antiparticle };
enum class Region { minkowski, rindler_I, rindler_II };

struct Mode {
  std::string name;
  Species species = Species::particle;
  Region region = Region::minkowski;

  friend bool operator==(const Mode&, const Mode&) = default;
};

/// How ladder operators pick up signs. `none` drops the Jordan-Wigner string
/// (hard-core bosons); it exists only so verification can prove it notices.
enum class SignRule { jordan_wigner, none };

using Occupation = std::uint32_t;

class ModeRegistry {
 public:
  explicit ModeRegistry(std::vector<Mode> modes, SignRule rule = SignRule::jordan_wigner)
      : modes_(std::move(modes)), rule_(rule) {
    if (modes_.size() > 31) throw Error(ErrorCode::dimension_mismatch, "at most 31 modes");
    for (std::size_t i = 0; i < modes_.size(); ++i)
      for (std::size_t j = i + 1; j < modes_.size(); ++j)
        if (modes_[i].name == modes_[j].name)
          throw Error(ErrorCode::unknown_mode, "duplicate mode '" + modes_[i].name + "'");
  }

  const std::vector<Mode>& modes() const noexcept { return modes_; }
  std::size_t size() const noexcept { return modes_.size(); }
  SignRule sign_rule() const noexcept { return rule_; }

  bool contains(const std::string& name) const {
    for (const auto& m : modes_)
      if (m.name == name) return true;
    return false;
  }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < modes_.size(); ++i)
      if (modes_[i].name == name) return i;
    throw Error(ErrorCode::unknown_mode, "no mode '" + name + "'");
  }

  friend bool operator==(const ModeRegistry&, const ModeRegistry&) = default;

 private:
  std::vector<Mode> modes_;
  SignRule rule_;
};

using RegistryPtr = std::shared_ptr<const ModeRegistry>;

inline RegistryPtr make_registry(std::vector<Mode> modes, SignRule rule = SignRule::jordan_wigner) {
  return std::make_shared<const ModeRegistry>(std::move(modes), rule);
}

class OccupationState {
 public:
  using Terms = std::map<Occupation, cplx>;

  explicit OccupationState(RegistryPtr registry) : registry_(std::move(registry)) {}
  OccupationState(RegistryPtr registry, Terms terms)
      : registry_(std::move(registry)), terms_(std::move(terms)) {
    prune();
  }

  static OccupationState vacuum(RegistryPtr registry) { return {std::move(registry), {{0u, 1.0}}}; }

  /// Basis ket from occupation numbers listed in registry order.
  static OccupationState basis(RegistryPtr registry, const std::vector<int>& occupations) {
    if (occupations.size() != registry->size())
      throw Error(ErrorCode::dimension_mismatch, "occupation list length");
    Occupation bits = 0;
    for (std::size_t k = 0; k < occupations.size(); ++k) {
      if (occupations[k] != 0 && occupations[k] != 1)
        throw Error(ErrorCode::out_of_range, "occupation numbers are 0 or 1");
      if (occupations[k]) bits |= Occupation{1} << k;
    }
    return {std::move(registry), {{bits, 1.0}}};
  }

  const ModeRegistry& registry() const noexcept { return *registry_; }
  const RegistryPtr& registry_ptr() const noexcept { return registry_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  cplx amplitude(Occupation bits) const {
    auto it = terms_.find(bits);
    return it == terms_.end() ? cplx{} : it->second;
  }

  cplx amplitude(const std::vector<int>& occupations) const {
    return amplitude(basis(registry_, occupations).terms().begin()->first);
  }

  double norm() const {
    double s = 0.0;
    for (const auto& [bits, amp] : terms_) s += std::norm(amp);
    return std::sqrt(s);
  }

  bool is_normalized(double tol = 1e-12) const { return std::abs(norm() - 1.0) <= tol; }

  /// <this|other>
  cplx inner(const OccupationState& other) const {
    require_same_registry(other);
    cplx s = 0.0;
    for (const auto& [bits, amp] : terms_) s += std::conj(amp) * other.amplitude(bits);
    return s;
  }

  double distance(const OccupationState& other) const {
    require_same_registry(other);
    OccupationState diff = *this;
    diff.add(other, -1.0);
    return diff.norm();
  }

  OccupationState& add(const OccupationState& other, cplx scale = 1.0) {
    require_same_registry(other);
    for (const auto& [bits, amp] : other.terms_) terms_[bits] += scale * amp;
    prune();
    return *this;
  }

  OccupationState& scale(cplx s) {
    for (auto& [bits, amp] : terms_) amp *= s;
    prune();
    return *this;
  }

  OccupationState normalized() const {
    const double n = norm();
    if (n == 0.0) throw Error(ErrorCode::unnormalized_state, "cannot normalize the zero state");
    OccupationState out = *this;
    return out.scale(1.0 / n);
  }

  void require_same_registry(const OccupationState& other) const {
    if (registry_ != other.registry_ && !(*registry_ == *other.registry_))
      throw Error(ErrorCode::unknown_mode, "states live on different mode registries");
  }

 private:
  void prune() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == cplx{}; });
  }

  RegistryPtr registry_;
  Terms terms_;
};

enum class LadderKind { create, annihilate };

struct LadderOp {
  std::string mode;
  LadderKind kind;
};

inline LadderOp create(std::string mode) { return {std::move(mode), LadderKind::create}; }
inline LadderOp annihilate(std::string mode) { return {std::move(mode), LadderKind::annihilate}; }

/// coefficient * ops[0] ops[1] ... ops[n-1]; ops.back() acts first.
struct OperatorTerm {
  cplx coefficient = 1.0;
  std::vector<LadderOp> ops;
};

using OperatorPolynomial = std::vector<OperatorTerm>;

inline OperatorPolynomial identity_operator() { return {OperatorTerm{1.0, {}}}; }

/// Operator product p*q (q acts first).
inline OperatorPolynomial multiply(const OperatorPolynomial& p, const OperatorPolynomial& q) {
  OperatorPolynomial out;
  for (const auto& a : p)
    for (const auto& b : q) {
      OperatorTerm t{a.coefficient * b.coefficient, a.ops};
      t.ops.insert(t.ops.end(), b.ops.begin(), b.ops.end());
      out.push_back(std::move(t));
    }
  return out;
}

inline OperatorPolynomial adjoint(const OperatorPolynomial& p) {
  OperatorPolynomial out;
  for (const auto& term : p) {
    OperatorTerm t{std::conj(term.coefficient), {}};
    for (auto it = term.ops.rbegin(); it != term.ops.rend(); ++it)
      t.ops.push_back({it->mode, it->kind == LadderKind::create ? LadderKind::annihilate
                                                                : LadderKind::create});
    out.push_back(std::move(t));
  }
  return out;
}

namespace detail {
inline int ladder_sign(const ModeRegistry& reg, Occupation bits, std::size_t index) {
  if (reg.sign_rule() == SignRule::none) return 1;
  const Occupation before = bits & ((Occupation{1} << index) - 1);
  return (std::popcount(before) % 2) ? -1 : 1;
}
}  // namespace detail

/// Applies one creation or annihilation operator. Terms that violate Pauli
/// exclusion (or annihilate an empty mode) vanish.
inline OccupationState apply_ladder(const LadderOp& op, const OccupationState& s) {
  const auto& reg = s.registry();
  const std::size_t k = reg.index_of(op.mode);
  const Occupation bit = Occupation{1} << k;
  OccupationState::Terms out;
  for (const auto& [bits, amp] : s.terms()) {
    const bool occupied = bits & bit;
    if ((op.kind == LadderKind::create) == occupied) continue;
    out[bits ^ bit] += static_cast<double>(detail::ladder_sign(reg, bits, k)) * amp;
  }
  return {s.registry_ptr(), std::move(out)};
}

inline OccupationState apply_operator_poly(const OperatorPolynomial& poly, const OccupationState& s) {
  OccupationState result(s.registry_ptr());
  for (const auto& term : poly) {
    OccupationState t = s;
    for (auto it = term.ops.rbegin(); it != term.ops.rend() && !t.is_zero(); ++it)
      t = apply_ladder(*it, t);
    result.add(t, term.coefficient);
  }
  return result;
}

/// <s| P |s>
inline cplx expectation(const OperatorPolynomial& poly, const OccupationState& s) {
  return s.inner(apply_operator_poly(poly, s));
}

inline OperatorPolynomial number_operator(const std::string& mode) {
  return {OperatorTerm{1.0, {create(mode), annihilate(mode)}}};
}

/// The polynomial P with P|vac> = s, built from registry-ordered creation strings.
inline OperatorPolynomial creation_polynomial(const OccupationState& s) {
  OperatorPolynomial out;
  const auto& modes = s.registry().modes();
  for (const auto& [bits, amp] : s.terms()) {
    OperatorTerm t{amp, {}};
    for (std::size_t k = 0; k < modes.size(); ++k)
      if (bits & (Occupation{1} << k)) t.ops.push_back(create(modes[k].name));
    out.push_back(std::move(t));
  }
  return out;
}

/// Names of the two Rindler modes that replace one Minkowski particle mode.
struct RindlerPair {
  std::string region_I = "I";    // particle, region I
  std::string region_II = "II";  // antiparticle, region II
};

inline RegistryPtr rindler_registry(const RindlerPair& pair = {}) {
  return make_registry({{pair.region_I, Species::particle, Region::rindler_I},
                        {pair.region_II, Species::antiparticle, Region::rindler_II}});
}

/// Minkowski particle annihilator a_k = cos r c^I_k - sin r d^{II dag}_{-k}
/// (phase absorbed into the operators).
inline OperatorPolynomial minkowski_annihilator(double r, const RindlerPair& pair = {}) {
  return {OperatorTerm{std::cos(r), {annihilate(pair.region_I)}},
          OperatorTerm{-std::sin(r), {create(pair.region_II)}}};
}

/// a_k^dag = cos r c^{I dag}_k - sin r d^{II}_{-k}
inline OperatorPolynomial minkowski_creator(double r, const RindlerPair& pair = {}) {
  return adjoint(minkowski_annihilator(r, pair));
}

/// Minkowski antiparticle annihilator b_{-k} = cos r d^{II}_{-k} + sin r c^{I dag}_k,
/// the adjoint of b_{-k}^dag = cos r d^{II dag}_{-k} + sin r c^I_k.
inline OperatorPolynomial minkowski_antiparticle_annihilator(double r, const RindlerPair& pair = {}) {
  return {OperatorTerm{std::cos(r), {annihilate(pair.region_II)}},
          OperatorTerm{std::sin(r), {create(pair.region_I)}}};
}

/// Unique normalized state in span(basis) annihilated by every operator in
/// `annihilators`. The phase is fixed so the first nonzero amplitude (in basis
/// order) is real and positive. Throws NoSolution unless the null space is
/// exactly one-dimensional.
inline OccupationState solve_annihilated_state(const RegistryPtr& registry,
                                               const std::vector<Occupation>& basis,
                                               const std::vector<OperatorPolynomial>& annihilators) {
  const std::size_t n = basis.size();
  std::vector<OccupationState> images;
  for (const auto& bits : basis) {
    const OccupationState ket(registry, {{bits, 1.0}});
    for (const auto& op : annihilators) images.push_back(apply_operator_poly(op, ket));
  }
  // Gram matrix G_ij = sum over operators of <O b_i | O b_j>; its null space
  // holds exactly the coefficient vectors annihilated by every operator.
  const std::size_t nops = annihilators.size();
  ComplexMatrix gram(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t o = 0; o < nops; ++o)
        gram(i, j) += images[i * nops + o].inner(images[j * nops + o]);

  const auto es = eig_hermitian(gram);
  const double scale = std::max(1.0, gram.trace().real());
  if (es.values[0] > 1e-12 * scale)
    throw Error(ErrorCode::no_solution, "no state is annihilated by all operators");
  if (n > 1 && es.values[1] <= 1e-10 * scale)
    throw Error(ErrorCode::no_solution, "annihilation conditions leave a degenerate null space");

  cplx phase = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(es.vectors(i, 0)) > 1e-12) {
      phase = std::conj(es.vectors(i, 0)) / std::abs(es.vectors(i, 0));
      break;
    }
  OccupationState::Terms terms;
  for (std::size_t i = 0; i < n; ++i) terms[basis[i]] = phase * es.vectors(i, 0);
  return OccupationState(registry, std::move(terms)).normalized();
}

/// Minkowski particle vacuum of one mode expanded over the Rindler modes.
///
/// Solves a_k |0> = 0 on the paired ansatz A0 |0>_I|0>_II + A1 |1>_I|1>_II, then
/// confirms on the full four-ket space that a_k together with the antiparticle
/// annihilator b_{-k} fixes the same state, i.e. the unpaired amplitudes vanish.
inline OccupationState solve_minkowski_vacuum(double r, const RindlerPair& pair = {}) {
  const auto reg = rindler_registry(pair);
  // Bit 0 is region I, bit 1 is region II.
  const auto paired =
      solve_annihilated_state(reg, {0b00u, 0b11u}, {minkowski_annihilator(r, pair)});
  const auto full = solve_annihilated_state(
      reg, {0b00u, 0b01u, 0b10u, 0b11u},
      {minkowski_annihilator(r, pair), minkowski_antiparticle_annihilator(r, pair)});
  if (std::abs(full.amplitude(0b01u)) > 1e-12 || std::abs(full.amplitude(0b10u)) > 1e-12 ||
      paired.distance(full) > 1e-12)
    throw Error(ErrorCode::no_solution, "vacuum acquires unpaired occupations");
  return paired;
}

/// a_k^dag applied to the expanded vacuum; equals |1>_I |0>_II.
inline OccupationState minkowski_one_particle(double r, const RindlerPair& pair = {}) {
  return apply_operator_poly(minkowski_creator(r, pair), solve_minkowski_vacuum(r, pair));
}

/// Projector |s><s| with the layout's first label as most significant bit.
///
/// Each ket is re-expressed with its creation operators in layout order, so the
/// result does not depend on the registry order used to build `s`. Modes not
/// named in `layout` must be empty in every term.
inline DensityMatrix to_density_matrix(const OccupationState& s, const SubsystemLayout& layout) {
  const auto& reg = s.registry();
  if (!s.is_normalized(1e-12))
    throw Error(ErrorCode::unnormalized_state, "norm " + std::to_string(s.norm()));
  std::vector<std::size_t> mode_of_label;
  for (const auto& label : layout.labels()) mode_of_label.push_back(reg.index_of(label));

  Occupation listed = 0;
  for (auto k : mode_of_label) listed |= Occupation{1} << k;

  const std::size_t n = layout.size();
  std::vector<cplx> psi(layout.total_dim());
  for (const auto& [bits, amp] : s.terms()) {
    if (bits & ~listed)
      throw Error(ErrorCode::residual_occupation, "a mode outside the layout is occupied");
    std::size_t index = 0;
    std::vector<std::size_t> occupied_registry_positions;
    for (std::size_t p = 0; p < n; ++p)
      if (bits & (Occupation{1} << mode_of_label[p])) {
        index |= std::size_t{1} << (n - 1 - p);
        occupied_registry_positions.push_back(mode_of_label[p]);
      }
    // Sign of the permutation from registry order to layout order.
    int inversions = 0;
    for (std::size_t a = 0; a < occupied_registry_positions.size(); ++a)
      for (std::size_t b = a + 1; b < occupied_registry_positions.size(); ++b)
        if (occupied_registry_positions[a] > occupied_registry_positions[b]) ++inversions;
    const double sign = (reg.sign_rule() == SignRule::jordan_wigner && inversions % 2) ? -1.0 : 1.0;
    psi[index] += sign * amp;
  }

  ComplexMatrix rho(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i)
    for (std::size_t j = 0; j < psi.size(); ++j) rho(i, j) = psi[i] * std::conj(psi[j]);
  return {layout, std::move(rho)};
}

}  // namespace rqi
