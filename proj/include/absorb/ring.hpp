#ifndef ABSORB_RING_HPP_
#define ABSORB_RING_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absorb/error.hpp"

namespace absorb {

// Dense index of a ring element. Id 0 is always the additive zero.
using ElementId = std::uint32_t;

class Ring;
class Ideal;
using RingHandle = std::shared_ptr<const Ring>;

enum class RingKind { Zn, Product, Quotient, Localization, Table };

// Rings are never larger than this; everything is addressed by 32-bit ids.
inline constexpr std::uint64_t kMaxRingOrder = std::uint64_t{1} << 32;
// Rings up to this order get precomputed addition/multiplication tables.
inline constexpr std::uint64_t kTableCacheOrder = 1024;
// Default bound for exhaustive axiom verification.
inline constexpr std::uint64_t kAxiomCheckOrder = 256;

/// A finite commutative ring with identity 1 != 0.
///
/// Immutable once constructed; the unit set is computed during
/// construction. Instances are only created through the make_* functions
/// and shared as RingHandle.
class Ring {
 public:
  RingKind kind() const noexcept { return kind_; }
  std::uint64_t order() const noexcept { return order_; }
  ElementId one() const noexcept { return one_; }

  // Range-checked arithmetic; an id outside [0, order) raises WrongRing.
  ElementId add(ElementId a, ElementId b) const;
  ElementId mul(ElementId a, ElementId b) const;
  ElementId neg(ElementId a) const;
  ElementId sub(ElementId a, ElementId b) const;
  bool is_unit(ElementId x) const;

  // Unchecked variants for hot loops inside the library.
  ElementId add_fast(ElementId a, ElementId b) const noexcept {
    if (!add_table_.empty()) return add_table_[index(a, b)];
    return add_slow(a, b);
  }
  ElementId mul_fast(ElementId a, ElementId b) const noexcept {
    if (!mul_table_.empty()) return mul_table_[index(a, b)];
    return mul_slow(a, b);
  }
  ElementId neg_fast(ElementId a) const noexcept;
  bool is_unit_fast(ElementId x) const noexcept {
    if (!unit_flags_.empty()) return unit_flags_[x] != 0;
    return is_unit_slow(x);
  }

  void check_element(ElementId x) const;

  /// Sorted unit ids. Only available when the unit cache exists
  /// (order <= 2^24); raises TooLarge otherwise.
  const std::vector<ElementId>& units() const;
  /// Sorted nonunit ids, same availability as units().
  std::vector<ElementId> nonunits() const;

  // Zn
  std::uint64_t modulus() const noexcept { return modulus_; }

  // Product
  const std::vector<RingHandle>& factors() const noexcept { return factors_; }
  ElementId component(ElementId x, std::size_t k) const;
  ElementId compose(std::span<const ElementId> parts) const;

  // Quotient / Localization (realized as a quotient by the S-torsion kernel)
  const RingHandle& base() const noexcept { return base_; }
  /// Sorted base ids of the ideal factored out.
  const std::vector<ElementId>& kernel() const noexcept { return kernel_; }
  /// Generators recorded for the kernel (the modulus generators for a
  /// quotient, the kernel's greedy generating set for a localization).
  const std::vector<ElementId>& kernel_generators() const noexcept {
    return kernel_gens_;
  }
  /// Canonical map from the base ring.
  ElementId project(ElementId base_element) const;
  /// Minimal base-ring representative of a coset.
  ElementId representative(ElementId x) const;
  /// Sorted closure of the multiplicative set (Localization only).
  const std::vector<ElementId>& mult_closure() const noexcept {
    return mult_closure_;
  }
  const std::vector<ElementId>& mult_generators() const noexcept {
    return mult_gens_;
  }

  /// Canonical ring-spec string, e.g. "prod(Zn:2,Zn:3)".
  std::string spec() const;
  /// Human-readable element, e.g. "(1,0,1,1)" for product rings.
  std::string format_element(ElementId x) const;

 private:
  friend struct RingBuilder;
  friend RingHandle make_zn(std::uint64_t n);
  friend RingHandle make_product(std::vector<RingHandle> factors);
  friend RingHandle make_table_ring(std::uint64_t order,
                                    std::vector<ElementId> add,
                                    std::vector<ElementId> mul);
  Ring() = default;

  std::size_t index(ElementId a, ElementId b) const noexcept {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) + b;
  }
  ElementId add_slow(ElementId a, ElementId b) const noexcept;
  ElementId mul_slow(ElementId a, ElementId b) const noexcept;
  bool is_unit_slow(ElementId x) const noexcept;

  RingKind kind_ = RingKind::Zn;
  std::uint64_t order_ = 0;
  ElementId one_ = 0;

  std::uint64_t modulus_ = 0;

  std::vector<RingHandle> factors_;
  std::vector<std::uint64_t> strides_;

  RingHandle base_;
  std::vector<ElementId> kernel_;
  std::vector<ElementId> kernel_gens_;
  std::vector<ElementId> rep_;
  std::vector<ElementId> proj_;
  std::vector<ElementId> mult_closure_;
  std::vector<ElementId> mult_gens_;

  std::vector<ElementId> add_table_;
  std::vector<ElementId> mul_table_;
  std::vector<ElementId> neg_table_;
  std::vector<std::uint8_t> unit_flags_;
  std::vector<ElementId> units_;
};

/// Multiplicatively closed subset: the closure of a generator set with 1
/// adjoined. Construction fails with ZeroRing when 0 lands in the closure.
class MultSet {
 public:
  MultSet(RingHandle ring, std::vector<ElementId> generators);

  const RingHandle& ring() const noexcept { return ring_; }
  const std::vector<ElementId>& generators() const noexcept { return gens_; }
  const std::vector<ElementId>& closure() const noexcept { return closure_; }
  bool contains(ElementId x) const;

  friend bool operator==(const MultSet& a, const MultSet& b) {
    return a.ring_ == b.ring_ && a.closure_ == b.closure_;
  }

 private:
  RingHandle ring_;
  std::vector<ElementId> gens_;
  std::vector<ElementId> closure_;
};

RingHandle make_zn(std::uint64_t n);
RingHandle make_product(std::vector<RingHandle> factors);
/// R/J for a proper ideal J. Coset ids follow the sorted minimal
/// representatives, so the zero coset is id 0.
RingHandle make_quotient(const Ideal& modulus);
/// S^{-1}R, realized as R/K with K = { r : sr = 0 for some s in S }.
RingHandle make_localization(const MultSet& s);
/// Ring from explicit tables. Index 0 must be the additive zero; the
/// identity is located automatically. All axioms are verified eagerly.
RingHandle make_table_ring(std::uint64_t order, std::vector<ElementId> add,
                           std::vector<ElementId> mul);

/// Exhaustive ring-axiom check; returns a description of the first
/// violation, or nullopt. Rings above `bound` raise TooLarge.
std::optional<std::string> find_axiom_violation(
    const Ring& r, std::uint64_t bound = kAxiomCheckOrder);

/// Parse the ring-spec grammar:
///   Zn:<n> | prod(<spec>,...) | quot(<spec>, I(<g>,...)) | loc(<spec>, S(<s>,...))
/// Whitespace is ignored. Raises ParseError on malformed input.
RingHandle parse_ring_spec(std::string_view text);

}  // namespace absorb

#endif  // ABSORB_RING_HPP_
