#ifndef ABSORB_IDEAL_HPP_
#define ABSORB_IDEAL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "absorb/ring.hpp"

namespace absorb {

// Ideals are materialized as element sets; rings beyond this order only
// support the symbolic Z_n path.
inline constexpr std::uint64_t kMaxIdealRingOrder = std::uint64_t{1} << 24;

/// An ideal of a finite ring, stored as its sorted element set plus the
/// generators it was built from.
class Ideal {
 public:
  const RingHandle& ring() const noexcept { return ring_; }
  std::span<const ElementId> elements() const noexcept { return elements_; }
  std::span<const ElementId> generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return elements_.size(); }

  bool contains(ElementId x) const noexcept {
    return x < member_.size() && member_[x] != 0;
  }
  bool is_proper() const noexcept { return !contains(ring_->one()); }
  bool is_zero() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return elements_.size() == ring_->order(); }
  bool subset_of(const Ideal& other) const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_ == b.ring_ && a.elements_ == b.elements_;
  }
  // Canonical order: size, then lexicographic element set.
  friend std::strong_ordering operator<=>(const Ideal& a, const Ideal& b);

 private:
  friend class IdealBuilder;
  Ideal() = default;

  RingHandle ring_;
  std::vector<ElementId> elements_;
  std::vector<ElementId> gens_;
  std::vector<std::uint8_t> member_;
};

/// Incremental additive-subgroup closure used by every ideal constructor.
class IdealBuilder {
 public:
  explicit IdealBuilder(RingHandle ring);

  /// Adjoin `x` and close under addition.
  void insert(ElementId x);
  bool contains(ElementId x) const noexcept { return member_[x] != 0; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// Finish; `gens` are recorded as given.
  Ideal build(std::vector<ElementId> gens) &&;
  /// Finish with a greedy canonical generating set.
  Ideal build_canonical() &&;

 private:
  RingHandle ring_;
  std::vector<ElementId> elements_;
  std::vector<std::uint8_t> member_;
};

Ideal ideal_from_generators(const RingHandle& r, std::vector<ElementId> gens);
Ideal zero_ideal(const RingHandle& r);
Ideal whole_ring(const RingHandle& r);
Ideal principal(const RingHandle& r, ElementId a);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// a^m for m >= 1.
Ideal ideal_power(const Ideal& a, unsigned m);
/// Smallest k >= 1 with a^k == a^(k+1).
unsigned stabilization_index(const Ideal& a);
/// The fixpoint of the descending power chain, i.e. the intersection of
/// all powers.
Ideal omega_power(const Ideal& a);
/// (a : b) = { r : r b ⊆ a }.
Ideal colon(const Ideal& a, const Ideal& b);
/// (a : x) = { r : r x ∈ a }.
Ideal colon(const Ideal& a, ElementId x);
Ideal annihilator(const RingHandle& r, ElementId x);
/// x·a as an ideal.
Ideal scale(const Ideal& a, ElementId x);

/// Image of an ideal of the base ring in a quotient or localization.
Ideal image(const Ideal& base_ideal, const RingHandle& quotient);
/// Preimage (contraction) of an ideal of a quotient or localization.
Ideal preimage(const Ideal& quotient_ideal);
/// The modulus of a quotient / kernel of a localization, as a base ideal.
Ideal quotient_modulus(const RingHandle& quotient);

/// Projections of a product-ring ideal to each factor, verified to
/// reassemble into the ideal. nullopt if the ring is not a product or the
/// ideal does not factor.
std::optional<std::vector<Ideal>> factor_ideal(const Ideal& a);
/// The cartesian product of component ideals as an ideal of `product`.
Ideal product_ideal(const RingHandle& product, std::span<const Ideal> parts);

struct EnumerationLimits {
  std::uint64_t max_order = 256;
  std::size_t max_ideals = 4096;
};

/// Every ideal exactly once, in canonical order.
std::vector<Ideal> enumerate_ideals(const RingHandle& r,
                                    EnumerationLimits limits = {});

/// The enumerated ideal lattice of a ring with the structural queries that
/// depend on it.
class IdealLattice {
 public:
  explicit IdealLattice(RingHandle r, EnumerationLimits limits = {});

  const RingHandle& ring() const noexcept { return ring_; }
  // Rvalue overloads return by value so that range-for over a temporary
  // lattice does not dangle.
  const std::vector<Ideal>& ideals() const& noexcept { return ideals_; }
  std::vector<Ideal> ideals() && { return std::move(ideals_); }
  const std::vector<Ideal>& proper() const& noexcept { return proper_; }
  std::vector<Ideal> proper() && { return std::move(proper_); }
  const std::vector<Ideal>& maximal() const& noexcept { return maximal_; }
  std::vector<Ideal> maximal() && { return std::move(maximal_); }
  std::optional<std::size_t> index_of(const Ideal& a) const;

  bool is_quasi_local() const noexcept { return maximal_.size() == 1; }
  bool is_von_neumann_regular() const;

 private:
  RingHandle ring_;
  std::vector<Ideal> ideals_;
  std::vector<Ideal> proper_;
  std::vector<Ideal> maximal_;
};

std::vector<Ideal> maximal_ideals(const RingHandle& r);
bool is_quasi_local(const RingHandle& r);
bool is_von_neumann_regular(const RingHandle& r);

}  // namespace absorb

#endif  // ABSORB_IDEAL_HPP_
