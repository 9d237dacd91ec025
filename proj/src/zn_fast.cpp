#include "absorb/zn_fast.hpp"

#include <algorithm>
#include <numeric>

namespace absorb {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 gcd_product(u64 a, u64 b, u64 n) {
  // gcd(ab, n) without overflow: reduce ab mod n first.
  const auto ab = static_cast<u64>((static_cast<u128>(a) * b) % n);
  return std::gcd(ab, n);
}

// The divisor g with φ((d)) = (g); nullopt for ∅.
std::optional<u64> phi_generator(u64 n, u64 d, const PhiDescriptor& phi) {
  using Kind = PhiDescriptor::Kind;
  switch (phi.kind()) {
    case Kind::Empty:
      return std::nullopt;
    case Kind::Zero:
      return n;
    case Kind::Power: {
      u64 g = d;
      for (unsigned k = 1; k < phi.exponent(); ++k) {
        const u64 next = gcd_product(g, d, n);
        if (next == g) break;
        g = next;
      }
      return g;
    }
    case Kind::Omega: {
      u64 g = d;
      for (;;) {
        const u64 next = gcd_product(g, d, n);
        if (next == g) return g;
        g = next;
      }
    }
    default:
      fail(ErrorKind::InvalidInput,
           "Z_n fast path supports empty, zero, pow:<m> and omega only");
  }
}

}  // namespace

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<u64> small, large;
  for (u64 k = 1; k * k <= n; ++k) {
    if (n % k) continue;
    small.push_back(k);
    if (k != n / k) large.push_back(n / k);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

ZnVerdict zn_fast_classify(std::uint64_t n, std::uint64_t d,
                           const PhiDescriptor& phi) {
  if (n < 2) fail(ErrorKind::InvalidOrder, "Z_n needs n >= 2");
  if (d == 0 || n % d != 0)
    fail(ErrorKind::InvalidInput, "d must be a positive divisor of n");
  if (d == 1) fail(ErrorKind::InvalidInput, "(1) is not a proper ideal");
  const auto phi_gen = phi_generator(n, d, phi);

  // Class g (a divisor of n) lies in (e) iff e | g.
  auto in_ideal = [&](u64 g) { return g % d == 0; };
  auto in_phi = [&](u64 g) { return phi_gen && g % *phi_gen == 0; };

  std::vector<u64> nonunit_classes;
  for (auto g : divisors(n))
    if (g > 1) nonunit_classes.push_back(g);

  for (auto z : nonunit_classes) {
    if (in_ideal(z)) continue;
    for (auto x : nonunit_classes)
      for (auto y : nonunit_classes) {
        const auto xy = gcd_product(x, y, n);
        if (in_ideal(xy)) continue;
        const auto xyz = gcd_product(xy, z, n);
        if (in_ideal(xyz) && !in_phi(xyz))
          return {false, std::array<u64, 3>{x % n, y % n, z % n}};
      }
  }
  return {};
}

}  // namespace absorb
