#ifndef ABSORB_ZN_FAST_HPP_
#define ABSORB_ZN_FAST_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "absorb/phi.hpp"

namespace absorb {

/// Divisors of n in ascending order (trial division).
std::vector<std::uint64_t> divisors(std::uint64_t n);

struct ZnVerdict {
  bool holds = true;
  /// Divisor representatives (x, y, z) of a violation, as residues mod n
  /// (the divisor n itself is reported as 0).
  std::optional<std::array<std::uint64_t, 3>> witness;
};

/// φ-1-absorbing primeness of the ideal (d) in Z_n, decided over divisor
/// triples instead of element triples. Every x in Z_n is a unit multiple of
/// gcd(x, n), and ideal membership is invariant under unit multiples, so
/// only triples of divisors g > 1 need checking; (d)^m = (gcd(d^m, n)).
///
/// `phi` must be Empty, Zero, Power or Omega; d must divide n with d > 1
/// (d = n is the zero ideal). No RingHandle is built, so n may be large.
ZnVerdict zn_fast_classify(std::uint64_t n, std::uint64_t d,
                           const PhiDescriptor& phi);

}  // namespace absorb

#endif  // ABSORB_ZN_FAST_HPP_
