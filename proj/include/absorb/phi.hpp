#ifndef ABSORB_PHI_HPP_
#define ABSORB_PHI_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absorb/ideal.hpp"

namespace absorb {

/// Symbolic description of a map from ideals to ideals-or-∅.
class PhiDescriptor {
 public:
  enum class Kind { Empty, Zero, Power, Omega, Product, Quotient, Localized };

  static PhiDescriptor empty();
  static PhiDescriptor zero();
  static PhiDescriptor power(unsigned m);
  static PhiDescriptor omega();
  static PhiDescriptor product(std::vector<PhiDescriptor> parts);
  /// φ_J on R/J: I/J ↦ (φ(I) + J)/J.
  static PhiDescriptor quotient(PhiDescriptor base, Ideal modulus);
  /// φ_S on S⁻¹R: I ↦ S⁻¹φ(I ∩ R).
  static PhiDescriptor localized(PhiDescriptor base, MultSet s);

  Kind kind() const noexcept { return kind_; }
  unsigned exponent() const noexcept { return exponent_; }
  const std::vector<PhiDescriptor>& parts() const noexcept { return parts_; }
  const std::optional<Ideal>& modulus() const noexcept { return modulus_; }
  const std::optional<MultSet>& mult_set() const noexcept { return mult_set_; }

  /// φ-spec string: empty | zero | pow:<m> | omega | prod(...) | quot(..) | loc(..)
  std::string to_string() const;

 private:
  PhiDescriptor() = default;

  Kind kind_ = Kind::Empty;
  unsigned exponent_ = 0;
  std::vector<PhiDescriptor> parts_;
  std::optional<Ideal> modulus_;
  std::optional<MultSet> mult_set_;
};

/// Result of evaluating φ: either the ∅ marker or a subset of the ring.
/// Standard evaluation always yields an ideal; arbitrary subsets exist so
/// that verifiers can be run against deliberately corrupted evaluators.
class PhiValue {
 public:
  static PhiValue empty_marker(RingHandle ring);
  static PhiValue of(Ideal ideal);
  static PhiValue from_set(RingHandle ring, std::vector<ElementId> elements);

  const RingHandle& ring() const noexcept { return ring_; }
  bool is_empty_marker() const noexcept { return empty_; }
  bool contains(ElementId x) const noexcept {
    return !empty_ && member_[x] != 0;
  }
  /// Set when the value is a genuine ideal.
  const std::optional<Ideal>& ideal() const noexcept { return ideal_; }
  const std::vector<ElementId>& elements() const noexcept { return elements_; }

  /// True when every element of `a` lies in the value (false for ∅ unless
  /// `a` is empty, which never happens for ideals).
  bool contains_all(const Ideal& a) const;
  /// Value equals the ideal `a` as a set.
  bool equals(const Ideal& a) const;

 private:
  PhiValue() = default;

  RingHandle ring_;
  bool empty_ = true;
  std::vector<ElementId> elements_;
  std::vector<std::uint8_t> member_;
  std::optional<Ideal> ideal_;
};

/// φ(I) for a proper ideal I. Raises InvalidInput for improper ideals and
/// for descriptors that do not fit the ideal's ring.
PhiValue eval_phi(const PhiDescriptor& phi, const Ideal& i);
/// Same, but also accepts I = R (needed for componentwise evaluation of
/// product maps, where a factor may be the whole ring).
PhiValue eval_phi_any(const PhiDescriptor& phi, const Ideal& i);

/// φ ≤ ψ pointwise on all proper ideals of r, with ∅ below everything.
bool phi_leq(const PhiDescriptor& phi, const PhiDescriptor& psi,
             const RingHandle& r);

/// Evaluator hook used by the verifiers; defaults to eval_phi.
using PhiEvaluator =
    std::function<PhiValue(const PhiDescriptor&, const Ideal&)>;
PhiEvaluator standard_evaluator();

/// Clamping events: a transported value escaped its input ideal and was
/// intersected back. Stays empty for the maps defined here.
std::vector<std::string> phi_anomalies();
void clear_phi_anomalies();

/// Ring-independent φ-spec syntax tree; bind_phi() resolves moduli and
/// multiplicative sets against a concrete ring.
struct PhiSpec {
  PhiDescriptor::Kind kind = PhiDescriptor::Kind::Empty;
  unsigned exponent = 0;
  std::vector<PhiSpec> parts;

  std::string to_string() const;
};

PhiSpec parse_phi_spec(std::string_view text);
/// Comma-separated list at top level, e.g. "zero,empty,prod(zero,pow:2)".
std::vector<PhiSpec> parse_phi_list(std::string_view text);
PhiDescriptor bind_phi(const PhiSpec& spec, const RingHandle& r);

}  // namespace absorb

#endif  // ABSORB_PHI_HPP_
