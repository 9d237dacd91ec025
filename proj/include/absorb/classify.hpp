#ifndef ABSORB_CLASSIFY_HPP_
#define ABSORB_CLASSIFY_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absorb/ideal.hpp"
#include "absorb/phi.hpp"

namespace absorb {

/// Which definition a witness violates.
enum class WitnessKind {
  OneAbsorbing,        // (x, y, z): nonunits, xyz ∈ I − φ(I), xy ∉ I, z ∉ I
  PhiPrime,            // (x, y): xy ∈ I − φ(I), x ∉ I, y ∉ I
  TwoAbsorbing,        // (x, y, z): xyz ∈ I, xy, xz, yz ∉ I
  WeaklyTwoAbsorbing,  // (x, y, z): 0 ≠ xyz ∈ I, xy, xz, yz ∉ I
};

std::string_view to_string(WitnessKind kind) noexcept;

struct Witness {
  WitnessKind kind;
  std::vector<ElementId> elements;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of a predicate: the truth value and, when false, the least
/// violating tuple.
///
/// Search order is fixed so witnesses are reproducible. Pairs (x, y) are
/// minimal lexicographically. Triples for the 1-absorbing family are
/// minimal under the key (x, z, y): after x, the factor that must land in
/// I on its own is minimized. Triples for the 2-absorbing predicates are
/// lexicographic in (x, y, z).
struct Check {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return holds; }
};

// --- 1-absorbing family: quantifies over nonunits only -------------------

Check is_phi_one_absorbing_prime(const Ideal& i, const PhiValue& phi);
Check is_phi_one_absorbing_prime(const Ideal& i, const PhiDescriptor& phi);
Check is_one_absorbing_prime(const Ideal& i);
Check is_weakly_one_absorbing(const Ideal& i);
Check is_w_one_absorbing(const Ideal& i);
/// φ(I) = I^m, m >= 2.
Check is_n_almost_one_absorbing(const Ideal& i, unsigned m);
Check is_almost_one_absorbing(const Ideal& i);

// --- pair predicates: quantify over all elements, units included ----------

Check is_phi_prime(const Ideal& i, const PhiValue& phi);
Check is_phi_prime(const Ideal& i, const PhiDescriptor& phi);
Check is_prime(const Ideal& i);
Check is_weakly_prime(const Ideal& i);
Check is_almost_prime(const Ideal& i);

// --- 2-absorbing: all elements -------------------------------------------

/// Requires a nonzero proper ideal (InvalidInput otherwise).
Check is_two_absorbing(const Ideal& i);
Check is_weakly_two_absorbing(const Ideal& i);

/// Re-evaluates the violated definition on the witness tuple. `phi` is
/// ignored for the 2-absorbing kinds.
bool replay(const Ideal& i, const PhiValue& phi, const Witness& w);

// --- colon / ideal-product characterizations -----------------------------

/// Evaluates one of the equivalent characterizations of φ-1-absorbing
/// primeness literally:
///   1  the definition;
///   2  (I:xy) = I ∪ (φ(I):xy) for nonunits x, y with xy ∉ I;
///   3  (I:xy) = I or (I:xy) = (φ(I):xy), same quantifier;
///   4  xyJ ⊆ I, xyJ ⊄ φ(I) ⇒ xy ∈ I or J ⊆ I (nonunits x, y; proper J);
///   5  xJK ⊆ I, xJK ⊄ φ(I) ⇒ xJ ⊆ I or K ⊆ I (nonunit x; proper J, K);
///   6  JKL ⊆ I, JKL ⊄ φ(I) ⇒ JK ⊆ I or L ⊆ I (proper J, K, L).
/// Variants 4-6 need the ideal lattice; one is enumerated when not given.
bool tmm_check(const Ideal& i, const PhiValue& phi, int variant,
               const IdealLattice* lattice = nullptr);
bool tmm_check(const Ideal& i, const PhiDescriptor& phi, int variant,
               const IdealLattice* lattice = nullptr);

// --- triple zeros ----------------------------------------------------------

struct TripleZero {
  ElementId x, y, z;
  friend bool operator==(const TripleZero&, const TripleZero&) = default;
};

/// Least (key (x, z, y)) nonunit triple with xyz ∈ φ(I), xy ∉ I, z ∉ I.
/// Raises PreconditionViolated unless I is φ-1-absorbing prime.
std::optional<TripleZero> find_triple_zero(const Ideal& i,
                                           const PhiValue& phi);
std::optional<TripleZero> find_triple_zero(const Ideal& i,
                                           const PhiDescriptor& phi);
/// Exploration helper: the same search without the precondition. Results
/// for ideals that are not φ-1-absorbing are not triple zeros in the
/// defined sense.
std::optional<TripleZero> search_triple_zero_unchecked(const Ideal& i,
                                                       const PhiValue& phi);
/// Every triple zero, in search order.
std::vector<TripleZero> all_triple_zeros(const Ideal& i, const PhiValue& phi);

// --- full report -----------------------------------------------------------

struct Classification {
  Ideal ideal;
  Check prime{}, weakly_prime{}, almost_prime{};
  std::optional<Check> two_absorbing{};  // absent for the zero ideal
  Check weakly_two_absorbing{};
  Check one_absorbing_prime{}, weakly_one_absorbing{}, w_one_absorbing{};
  Check almost_one_absorbing{};
  std::map<unsigned, Check> n_almost{};  // m = 2 .. max(3, stabilization index)
  std::vector<std::pair<std::string, Check>> phi_prime{};          // by φ-spec
  std::vector<std::pair<std::string, Check>> phi_one_absorbing{};  // by φ-spec
};

Classification classify(const Ideal& i, const std::vector<PhiDescriptor>& phis);

}  // namespace absorb

#endif  // ABSORB_CLASSIFY_HPP_
