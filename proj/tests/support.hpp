#ifndef ABSORB_TESTS_SUPPORT_HPP_
#define ABSORB_TESTS_SUPPORT_HPP_

#include <string>
#include <vector>

#include "absorb/classify.hpp"
#include "absorb/theorems.hpp"
#include "oracle.hpp"

namespace support {

// Default corpus rings, parsed once.
inline const std::vector<absorb::RingHandle>& corpus() {
  static const auto rings = [] {
    std::vector<absorb::RingHandle> out;
    for (const auto& s : absorb::default_corpus_specs())
      out.push_back(absorb::parse_ring_spec(s));
    return out;
  }();
  return rings;
}

// Oracle model of a Zn or product-of-Zn ring.
inline oracle::Ring model(const absorb::Ring& r) {
  if (r.kind() == absorb::RingKind::Zn) return oracle::Ring({r.modulus()});
  std::vector<std::uint64_t> mods;
  for (const auto& f : r.factors()) mods.push_back(f->modulus());
  return oracle::Ring(mods);
}

inline oracle::Set as_set(const absorb::Ideal& i) {
  oracle::Set s(i.ring()->order(), false);
  for (auto x : i.elements()) s[x] = true;
  return s;
}

// Corrupted φ: the smallest set keeping I φ-1-absorbing, namely every
// xyz ∈ I with x, y, z nonunits, xy ∉ I, z ∉ I. Triple zeros abound, but
// the set is not closed under multiplication by I.
inline absorb::SuiteOptions triple_product_mutation() {
  absorb::SuiteOptions o;
  o.evaluator = [](const absorb::PhiDescriptor& d, const absorb::Ideal& i) {
    auto v = absorb::eval_phi(d, i);
    if (v.is_empty_marker()) return v;
    const auto& r = *i.ring();
    const auto nu = r.nonunits();
    std::vector<absorb::ElementId> t;
    for (auto x : nu)
      for (auto y : nu) {
        const auto xy = r.mul(x, y);
        if (i.contains(xy)) continue;
        for (auto z : nu) {
          if (i.contains(z)) continue;
          const auto p = r.mul(xy, z);
          if (i.contains(p)) t.push_back(p);
        }
      }
    return absorb::PhiValue::from_set(i.ring(), t);
  };
  return o;
}

inline std::vector<absorb::ElementId> ids(std::initializer_list<absorb::ElementId> xs) {
  return xs;
}

template <class Span>
std::vector<absorb::ElementId> vec(const Span& s) {
  return {s.begin(), s.end()};
}

}  // namespace support

#endif  // ABSORB_TESTS_SUPPORT_HPP_
