#include "absorb/classify.hpp"

#include <algorithm>
#include <tuple>

namespace absorb {

std::string_view to_string(WitnessKind kind) noexcept {
  switch (kind) {
    case WitnessKind::OneAbsorbing: return "one_absorbing";
    case WitnessKind::PhiPrime: return "phi_prime";
    case WitnessKind::TwoAbsorbing: return "two_absorbing";
    case WitnessKind::WeaklyTwoAbsorbing: return "weakly_two_absorbing";
  }
  return "unknown";
}

namespace {

void require_proper(const Ideal& i) {
  if (!i.is_proper())
    fail(ErrorKind::InvalidInput, "predicate needs a proper ideal");
}

void require_ring(const Ideal& i, const PhiValue& phi) {
  if (i.ring() != phi.ring())
    fail(ErrorKind::WrongRing, "φ value belongs to another ring");
}

Check violated(WitnessKind kind, std::vector<ElementId> elements) {
  return Check{false, Witness{kind, std::move(elements)}};
}

// For each product value p, whether p = xy for some nonunits x, y with
// p ∉ I.
std::vector<std::uint8_t> reachable_outside(const Ideal& i,
                                            const std::vector<ElementId>& nu) {
  const auto& r = *i.ring();
  std::vector<std::uint8_t> out(r.order(), 0);
  for (std::size_t a = 0; a < nu.size(); ++a)
    for (std::size_t b = a; b < nu.size(); ++b) {
      const auto p = r.mul_fast(nu[a], nu[b]);
      if (!i.contains(p)) out[p] = 1;
    }
  return out;
}

}  // namespace

Check is_phi_one_absorbing_prime(const Ideal& i, const PhiValue& phi) {
  require_proper(i);
  require_ring(i, phi);
  const auto& r = *i.ring();
  const auto nu = r.nonunits();
  const auto reachable = reachable_outside(i, nu);
  std::vector<ElementId> products;
  for (ElementId p = 0; p < r.order(); ++p)
    if (reachable[p]) products.push_back(p);
  std::vector<ElementId> outside;
  for (auto z : nu)
    if (!i.contains(z)) outside.push_back(z);

  // Cheap existence test over distinct products before the ordered scan.
  const bool bad = std::any_of(outside.begin(), outside.end(), [&](auto z) {
    return std::any_of(products.begin(), products.end(), [&](auto p) {
      const auto t = r.mul_fast(p, z);
      return i.contains(t) && !phi.contains(t);
    });
  });
  if (!bad) return {};
  for (auto x : nu)
    for (auto z : outside)
      for (auto y : nu) {
        const auto p = r.mul_fast(x, y);
        if (i.contains(p)) continue;
        const auto t = r.mul_fast(p, z);
        if (i.contains(t) && !phi.contains(t))
          return violated(WitnessKind::OneAbsorbing, {x, y, z});
      }
  return {};
}

Check is_phi_one_absorbing_prime(const Ideal& i, const PhiDescriptor& phi) {
  return is_phi_one_absorbing_prime(i, eval_phi(phi, i));
}

Check is_one_absorbing_prime(const Ideal& i) {
  return is_phi_one_absorbing_prime(i, PhiDescriptor::empty());
}

Check is_weakly_one_absorbing(const Ideal& i) {
  return is_phi_one_absorbing_prime(i, PhiDescriptor::zero());
}

Check is_w_one_absorbing(const Ideal& i) {
  return is_phi_one_absorbing_prime(i, PhiDescriptor::omega());
}

Check is_n_almost_one_absorbing(const Ideal& i, unsigned m) {
  if (m < 2)
    fail(ErrorKind::InvalidExponent, "n-almost needs exponent >= 2");
  return is_phi_one_absorbing_prime(i, PhiDescriptor::power(m));
}

Check is_almost_one_absorbing(const Ideal& i) {
  return is_phi_one_absorbing_prime(i, PhiDescriptor::power(2));
}

Check is_phi_prime(const Ideal& i, const PhiValue& phi) {
  require_proper(i);
  require_ring(i, phi);
  const auto& r = *i.ring();
  const auto n = static_cast<ElementId>(r.order());
  for (ElementId x = 0; x < n; ++x) {
    if (i.contains(x)) continue;
    for (ElementId y = 0; y < n; ++y) {
      if (i.contains(y)) continue;
      const auto p = r.mul_fast(x, y);
      if (i.contains(p) && !phi.contains(p))
        return violated(WitnessKind::PhiPrime, {x, y});
    }
  }
  return {};
}

Check is_phi_prime(const Ideal& i, const PhiDescriptor& phi) {
  return is_phi_prime(i, eval_phi(phi, i));
}

Check is_prime(const Ideal& i) {
  return is_phi_prime(i, PhiDescriptor::empty());
}

Check is_weakly_prime(const Ideal& i) {
  return is_phi_prime(i, PhiDescriptor::zero());
}

Check is_almost_prime(const Ideal& i) {
  return is_phi_prime(i, PhiDescriptor::power(2));
}

namespace {

Check two_absorbing_scan(const Ideal& i, bool weakly) {
  const auto& r = *i.ring();
  const auto n = static_cast<ElementId>(r.order());
  const auto kind =
      weakly ? WitnessKind::WeaklyTwoAbsorbing : WitnessKind::TwoAbsorbing;
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      const auto xy = r.mul_fast(x, y);
      if (i.contains(xy)) continue;
      for (ElementId z = 0; z < n; ++z) {
        const auto t = r.mul_fast(xy, z);
        if (!i.contains(t) || (weakly && t == 0)) continue;
        if (i.contains(r.mul_fast(x, z)) || i.contains(r.mul_fast(y, z)))
          continue;
        return violated(kind, {x, y, z});
      }
    }
  return {};
}

}  // namespace

Check is_two_absorbing(const Ideal& i) {
  require_proper(i);
  if (i.is_zero())
    fail(ErrorKind::InvalidInput, "2-absorbing needs a nonzero ideal");
  return two_absorbing_scan(i, false);
}

Check is_weakly_two_absorbing(const Ideal& i) {
  require_proper(i);
  return two_absorbing_scan(i, true);
}

bool replay(const Ideal& i, const PhiValue& phi, const Witness& w) {
  const auto& r = *i.ring();
  for (auto e : w.elements)
    if (e >= r.order()) return false;
  switch (w.kind) {
    case WitnessKind::OneAbsorbing: {
      if (w.elements.size() != 3) return false;
      const auto [x, y, z] =
          std::tuple{w.elements[0], w.elements[1], w.elements[2]};
      if (r.is_unit(x) || r.is_unit(y) || r.is_unit(z)) return false;
      const auto xy = r.mul(x, y);
      const auto t = r.mul(xy, z);
      return i.contains(t) && !phi.contains(t) && !i.contains(xy) &&
             !i.contains(z);
    }
    case WitnessKind::PhiPrime: {
      if (w.elements.size() != 2) return false;
      const auto p = r.mul(w.elements[0], w.elements[1]);
      return i.contains(p) && !phi.contains(p) && !i.contains(w.elements[0]) &&
             !i.contains(w.elements[1]);
    }
    case WitnessKind::TwoAbsorbing:
    case WitnessKind::WeaklyTwoAbsorbing: {
      if (w.elements.size() != 3) return false;
      const auto [x, y, z] =
          std::tuple{w.elements[0], w.elements[1], w.elements[2]};
      const auto t = r.mul(r.mul(x, y), z);
      if (!i.contains(t)) return false;
      if (w.kind == WitnessKind::WeaklyTwoAbsorbing && t == 0) return false;
      return !i.contains(r.mul(x, y)) && !i.contains(r.mul(x, z)) &&
             !i.contains(r.mul(y, z));
    }
  }
  return false;
}

std::optional<TripleZero> search_triple_zero_unchecked(const Ideal& i,
                                                       const PhiValue& phi) {
  require_proper(i);
  require_ring(i, phi);
  if (phi.is_empty_marker()) return std::nullopt;
  const auto& r = *i.ring();
  const auto nu = r.nonunits();
  for (auto x : nu)
    for (auto z : nu) {
      if (i.contains(z)) continue;
      for (auto y : nu) {
        const auto p = r.mul_fast(x, y);
        if (!i.contains(p) && phi.contains(r.mul_fast(p, z)))
          return TripleZero{x, y, z};
      }
    }
  return std::nullopt;
}

std::optional<TripleZero> find_triple_zero(const Ideal& i,
                                           const PhiValue& phi) {
  if (!is_phi_one_absorbing_prime(i, phi))
    fail(ErrorKind::PreconditionViolated,
         "triple zeros are defined for φ-1-absorbing prime ideals only");
  return search_triple_zero_unchecked(i, phi);
}

std::optional<TripleZero> find_triple_zero(const Ideal& i,
                                           const PhiDescriptor& phi) {
  return find_triple_zero(i, eval_phi(phi, i));
}

std::vector<TripleZero> all_triple_zeros(const Ideal& i, const PhiValue& phi) {
  require_proper(i);
  require_ring(i, phi);
  std::vector<TripleZero> out;
  if (phi.is_empty_marker()) return out;
  const auto& r = *i.ring();
  const auto nu = r.nonunits();
  for (auto x : nu)
    for (auto z : nu) {
      if (i.contains(z)) continue;
      for (auto y : nu) {
        const auto p = r.mul_fast(x, y);
        if (!i.contains(p) && phi.contains(r.mul_fast(p, z)))
          out.push_back({x, y, z});
      }
    }
  return out;
}

Classification classify(const Ideal& i, const std::vector<PhiDescriptor>& phis) {
  require_proper(i);
  Classification c{.ideal = i};
  c.prime = is_prime(i);
  c.weakly_prime = is_weakly_prime(i);
  c.almost_prime = is_almost_prime(i);
  if (!i.is_zero()) c.two_absorbing = is_two_absorbing(i);
  c.weakly_two_absorbing = is_weakly_two_absorbing(i);
  c.one_absorbing_prime = is_one_absorbing_prime(i);
  c.weakly_one_absorbing = is_weakly_one_absorbing(i);
  c.w_one_absorbing = is_w_one_absorbing(i);
  c.almost_one_absorbing = is_almost_one_absorbing(i);
  const unsigned top = std::max(3u, stabilization_index(i));
  for (unsigned m = 2; m <= top; ++m)
    c.n_almost.emplace(m, is_n_almost_one_absorbing(i, m));
  for (const auto& phi : phis) {
    const auto value = eval_phi(phi, i);
    c.phi_prime.emplace_back(phi.to_string(), is_phi_prime(i, value));
    c.phi_one_absorbing.emplace_back(phi.to_string(),
                                     is_phi_one_absorbing_prime(i, value));
  }
  return c;
}

}  // namespace absorb
