#ifndef ABSORB_THEOREMS_HPP_
#define ABSORB_THEOREMS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absorb/classify.hpp"

namespace absorb {

enum class VerdictStatus {
  Pass,
  Fail,
  NotApplicable,  // hypotheses never met on this ring
  Info,           // empirical report, never fails
  Error,          // ring could not be processed (parse error, too large)
};

std::string_view to_string(VerdictStatus s) noexcept;

/// A concrete instance: the ideal (by generators) of `ring`, the φ used,
/// and the elements realizing the claim that failed.
struct Instance {
  std::string ring;
  std::vector<ElementId> ideal_generators;
  std::string phi;
  std::string claim;
  std::vector<ElementId> elements;
  std::optional<Witness> witness;
};

struct TheoremVerdict {
  std::string theorem;
  std::string ring;
  std::uint64_t checked = 0;  // instances whose hypotheses held
  std::uint64_t skipped = 0;  // instances dropped by a hypothesis check
  VerdictStatus status = VerdictStatus::NotApplicable;
  std::optional<Instance> counterexample;  // set on Fail
  std::optional<Instance> evidence;        // supporting instance, if any
  std::vector<std::string> notes;
};

/// Options shared by all verifiers. `evaluator` replaces φ evaluation
/// everywhere, which is how corrupted builds are simulated in tests.
struct SuiteOptions {
  PhiEvaluator evaluator = standard_evaluator();
  std::vector<PhiDescriptor> phis = default_phis();

  /// {Empty, Zero, Power(2), Power(3), Omega, Power(1)}.
  static std::vector<PhiDescriptor> default_phis();
};

// --- per-instance verifiers --------------------------------------------

/// Triple-zero consequences for one (I, φ): xyI ⊆ φ(I) and, when xz, yz ∉
/// I, xzI, yzI, xI², yI², zI², I³ ⊆ φ(I), over every triple zero.
TheoremVerdict verify_triple_zero_consequences(
    const RingHandle& r, const Ideal& i, const PhiDescriptor& phi,
    const SuiteOptions& options = {});

/// (a) with (0:a) ⊆ (a): φ-1-absorbing ⟺ 1-absorbing for φ ≤ φ_2.
TheoremVerdict verify_principal(const RingHandle& r, ElementId a,
                                const SuiteOptions& options = {});

TheoremVerdict verify_localization_transfer(const RingHandle& r,
                                            const MultSet& s,
                                            const SuiteOptions& options = {});

/// tm1 and tnloc for two factors, tgen for two or three. The product ring
/// is built from `factors`; `phis` are the per-factor choices (every
/// combination is run).
std::vector<TheoremVerdict> verify_product_theorems(
    const std::vector<RingHandle>& factors,
    const std::vector<PhiDescriptor>& phis, const SuiteOptions& options = {});

// --- ring-level verifiers ------------------------------------------------

/// Implication lattice, monotonicity in φ, and the n-almost ⟺ w-1-absorbing
/// biconditional (m up to the stabilization index) for every proper ideal.
TheoremVerdict verify_implication_lattice(const RingHandle& r,
                                          const SuiteOptions& options = {});
/// Six-way agreement of the characterizations for every (I, φ).
TheoremVerdict verify_characterizations(const RingHandle& r,
                                        const SuiteOptions& options = {});
TheoremVerdict verify_triple_zero_consequences(
    const RingHandle& r, const SuiteOptions& options = {});
TheoremVerdict verify_principal(const RingHandle& r,
                                const SuiteOptions& options = {});
TheoremVerdict verify_phi_prime_equivalence(const RingHandle& r,
                                            const SuiteOptions& options = {});
TheoremVerdict verify_quotient_transfer(const RingHandle& r,
                                        const SuiteOptions& options = {});
/// Runs every multiplicative set closure{a} (a not nilpotent) and R − P
/// (P prime), deduplicated.
TheoremVerdict verify_localization_transfer(const RingHandle& r,
                                            const SuiteOptions& options = {});
/// Every proper ideal almost 1-absorbing ⟺ (quasi-local with m³ = 0) or
/// von Neumann regular. Evidence carries a failing ideal when the left
/// side is false.
TheoremVerdict verify_every_ideal_almost(const RingHandle& r,
                                         const SuiteOptions& options = {});
/// Empirical status of the triple-zero existence criterion and of the
/// 1-absorbing biconditional, under both readings of the colon witness
/// (unrestricted x, and nonunit x and z). Always Info.
std::vector<TheoremVerdict> check_remarks(const RingHandle& r,
                                          const SuiteOptions& options = {});

// --- corpus --------------------------------------------------------------

/// Theorem ids in report order.
const std::vector<std::string>& theorem_ids();

std::vector<std::string> default_corpus_specs();

struct CorpusOptions {
  std::vector<std::string> theorems;  // empty = all
  unsigned jobs = 0;                  // 0 = hardware concurrency
  SuiteOptions suite;
};

/// Runs every applicable verifier on every ring. Output order is spec
/// order, then theorem_ids() order, independent of `jobs`. Rings that fail
/// to parse or exceed enumeration bounds yield Error verdicts.
std::vector<TheoremVerdict> run_corpus(const std::vector<std::string>& specs,
                                       const CorpusOptions& options = {});

/// True when a Fail verdict's counterexample re-evaluates to a violation.
/// Only witness-carrying counterexamples can be replayed.
bool replay_counterexample(const Instance& c, const SuiteOptions& options = {});

}  // namespace absorb

#endif  // ABSORB_THEOREMS_HPP_
