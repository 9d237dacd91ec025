#include "absorb/ideal.hpp"

#include <algorithm>
#include <map>

namespace absorb {

namespace {

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring())
    fail(ErrorKind::WrongRing, "ideals belong to different rings");
}

void require_materializable(const RingHandle& r) {
  if (r->order() > kMaxIdealRingOrder)
    fail(ErrorKind::TooLarge, "ideal sets need ring order <= 2^24, got " +
                                  std::to_string(r->order()));
}

bool is_quotient_like(const RingHandle& r) {
  return r->kind() == RingKind::Quotient ||
         r->kind() == RingKind::Localization;
}

}  // namespace

bool Ideal::subset_of(const Ideal& other) const {
  require_same_ring(*this, other);
  if (size() > other.size()) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](ElementId x) { return other.contains(x); });
}

std::strong_ordering operator<=>(const Ideal& a, const Ideal& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.elements_.begin(), a.elements_.end(), b.elements_.begin(),
      b.elements_.end());
}

IdealBuilder::IdealBuilder(RingHandle ring) : ring_(std::move(ring)) {
  require_materializable(ring_);
  member_.assign(ring_->order(), 0);
  member_[0] = 1;
  elements_.push_back(0);
}

void IdealBuilder::insert(ElementId x) {
  if (member_[x]) return;
  // H + <x> is the union of the cosets H + kx, k = 1 .. t-1 where t is the
  // additive order of x modulo H.
  std::vector<ElementId> multiples;
  for (ElementId m = x; !member_[m]; m = ring_->add_fast(m, x))
    multiples.push_back(m);
  const std::size_t base_size = elements_.size();
  elements_.reserve(base_size * (multiples.size() + 1));
  for (auto m : multiples) {
    for (std::size_t i = 0; i < base_size; ++i) {
      const auto y = ring_->add_fast(elements_[i], m);
      member_[y] = 1;
      elements_.push_back(y);
    }
  }
}

Ideal IdealBuilder::build(std::vector<ElementId> gens) && {
  Ideal out;
  out.ring_ = std::move(ring_);
  std::sort(elements_.begin(), elements_.end());
  out.elements_ = std::move(elements_);
  out.member_ = std::move(member_);
  out.gens_ = std::move(gens);
  return out;
}

Ideal IdealBuilder::build_canonical() && {
  std::sort(elements_.begin(), elements_.end());
  // Greedy scan in id order: keep an element when it is not already in
  // the ideal generated by the kept ones.
  IdealBuilder span(ring_);
  std::vector<ElementId> gens;
  const auto n = static_cast<ElementId>(ring_->order());
  for (auto e : elements_) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    for (ElementId r = 0; r < n; ++r) span.insert(ring_->mul_fast(r, e));
    if (span.size() == elements_.size()) break;
  }
  return std::move(*this).build(std::move(gens));
}

Ideal ideal_from_generators(const RingHandle& r, std::vector<ElementId> gens) {
  for (auto g : gens) r->check_element(g);
  IdealBuilder b(r);
  const auto n = static_cast<ElementId>(r->order());
  for (auto g : gens) {
    if (b.contains(g)) continue;
    for (ElementId x = 0; x < n; ++x) b.insert(r->mul_fast(x, g));
  }
  return std::move(b).build(std::move(gens));
}

Ideal zero_ideal(const RingHandle& r) { return ideal_from_generators(r, {}); }

Ideal whole_ring(const RingHandle& r) {
  return ideal_from_generators(r, {r->one()});
}

Ideal principal(const RingHandle& r, ElementId a) {
  return ideal_from_generators(r, {a});
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  IdealBuilder builder(a.ring());
  for (auto x : a.elements()) builder.insert(x);
  for (auto x : b.elements()) builder.insert(x);
  std::vector<ElementId> gens(a.generators().begin(), a.generators().end());
  for (auto g : b.generators())
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  return std::move(builder).build(std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const auto& r = a.ring();
  IdealBuilder builder(r);
  for (auto x : a.elements())
    for (auto y : b.elements()) builder.insert(r->mul_fast(x, y));
  std::vector<ElementId> gens;
  for (auto g : a.generators())
    for (auto h : b.generators()) {
      const auto p = r->mul_fast(g, h);
      if (std::find(gens.begin(), gens.end(), p) == gens.end())
        gens.push_back(p);
    }
  return std::move(builder).build(std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  IdealBuilder builder(a.ring());
  for (auto x : a.elements())
    if (b.contains(x)) builder.insert(x);
  return std::move(builder).build_canonical();
}

Ideal ideal_power(const Ideal& a, unsigned m) {
  if (m == 0) fail(ErrorKind::InvalidExponent, "ideal power needs m >= 1");
  Ideal out = a;
  for (unsigned k = 1; k < m; ++k) {
    Ideal next = ideal_product(out, a);
    if (next == out) break;
    out = std::move(next);
  }
  return out;
}

unsigned stabilization_index(const Ideal& a) {
  const auto cap = a.ring()->order() + 1;
  Ideal current = a;
  for (unsigned k = 1; k <= cap; ++k) {
    Ideal next = ideal_product(current, a);
    if (next == current) return k;
    current = std::move(next);
  }
  // Powers strictly descend in a finite set; reaching here means the ring
  // tables are inconsistent.
  throw std::logic_error("ideal power chain did not stabilize");
}

Ideal omega_power(const Ideal& a) {
  return ideal_power(a, stabilization_index(a));
}

Ideal colon(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const auto& r = a.ring();
  IdealBuilder builder(r);
  const auto n = static_cast<ElementId>(r->order());
  // b is generated by its recorded generators, so testing those suffices.
  for (ElementId x = 0; x < n; ++x) {
    const bool inside =
        std::all_of(b.generators().begin(), b.generators().end(),
                    [&](ElementId g) { return a.contains(r->mul_fast(x, g)); });
    if (inside) builder.insert(x);
  }
  return std::move(builder).build_canonical();
}

Ideal colon(const Ideal& a, ElementId x) {
  const auto& r = a.ring();
  r->check_element(x);
  IdealBuilder builder(r);
  const auto n = static_cast<ElementId>(r->order());
  for (ElementId y = 0; y < n; ++y)
    if (a.contains(r->mul_fast(y, x))) builder.insert(y);
  return std::move(builder).build_canonical();
}

Ideal annihilator(const RingHandle& r, ElementId x) {
  return colon(zero_ideal(r), x);
}

Ideal scale(const Ideal& a, ElementId x) {
  const auto& r = a.ring();
  r->check_element(x);
  IdealBuilder builder(r);
  for (auto y : a.elements()) builder.insert(r->mul_fast(x, y));
  std::vector<ElementId> gens;
  for (auto g : a.generators()) gens.push_back(r->mul_fast(x, g));
  return std::move(builder).build(std::move(gens));
}

Ideal image(const Ideal& base_ideal, const RingHandle& quotient) {
  if (!is_quotient_like(quotient) || quotient->base() != base_ideal.ring())
    fail(ErrorKind::WrongRing, "image() needs a quotient of the ideal's ring");
  IdealBuilder builder(quotient);
  for (auto x : base_ideal.elements()) builder.insert(quotient->project(x));
  std::vector<ElementId> gens;
  for (auto g : base_ideal.generators()) {
    const auto p = quotient->project(g);
    if (p != 0 && std::find(gens.begin(), gens.end(), p) == gens.end())
      gens.push_back(p);
  }
  return std::move(builder).build(std::move(gens));
}

Ideal preimage(const Ideal& quotient_ideal) {
  const auto& q = quotient_ideal.ring();
  if (!is_quotient_like(q))
    fail(ErrorKind::WrongRing, "preimage() needs an ideal of a quotient ring");
  const auto& base = q->base();
  IdealBuilder builder(base);
  const auto n = static_cast<ElementId>(base->order());
  for (ElementId x = 0; x < n; ++x)
    if (quotient_ideal.contains(q->project(x))) builder.insert(x);
  return std::move(builder).build_canonical();
}

Ideal quotient_modulus(const RingHandle& quotient) {
  if (!is_quotient_like(quotient))
    fail(ErrorKind::WrongRing, "quotient_modulus() needs a quotient ring");
  IdealBuilder builder(quotient->base());
  for (auto x : quotient->kernel()) builder.insert(x);
  return std::move(builder).build(quotient->kernel_generators());
}

std::optional<std::vector<Ideal>> factor_ideal(const Ideal& a) {
  const auto& r = a.ring();
  if (r->kind() != RingKind::Product) return std::nullopt;
  const auto& factors = r->factors();
  std::vector<Ideal> parts;
  std::uint64_t expected = 1;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    IdealBuilder builder(factors[k]);
    for (auto x : a.elements()) builder.insert(r->component(x, k));
    parts.push_back(std::move(builder).build_canonical());
    expected *= parts.back().size();
  }
  // The projections always contain a; equal sizes force equality.
  if (expected != a.size()) return std::nullopt;
  return parts;
}

Ideal product_ideal(const RingHandle& product, std::span<const Ideal> parts) {
  if (product->kind() != RingKind::Product ||
      parts.size() != product->factors().size())
    fail(ErrorKind::InvalidInput, "product_ideal() needs one ideal per factor");
  for (std::size_t k = 0; k < parts.size(); ++k)
    if (parts[k].ring() != product->factors()[k])
      fail(ErrorKind::WrongRing, "component ideal of the wrong factor");
  IdealBuilder builder(product);
  std::vector<ElementId> tuple(parts.size(), 0);
  // Generators of the cartesian product: each component generator placed
  // in its own coordinate.
  std::vector<ElementId> gens;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (auto g : parts[k].generators()) {
      std::fill(tuple.begin(), tuple.end(), 0);
      tuple[k] = g;
      gens.push_back(product->compose(tuple));
    }
    for (auto x : parts[k].elements()) {
      std::fill(tuple.begin(), tuple.end(), 0);
      tuple[k] = x;
      builder.insert(product->compose(tuple));
    }
  }
  return std::move(builder).build(std::move(gens));
}

std::vector<Ideal> enumerate_ideals(const RingHandle& r,
                                    EnumerationLimits limits) {
  if (r->order() > limits.max_order)
    fail(ErrorKind::TooLarge, "ideal enumeration limited to order " +
                                  std::to_string(limits.max_order) + ", got " +
                                  std::to_string(r->order()));
  std::map<std::vector<ElementId>, Ideal> found;
  std::vector<const Ideal*> fresh;
  auto record = [&](Ideal&& ideal) {
    std::vector<ElementId> key(ideal.elements().begin(),
                               ideal.elements().end());
    auto [it, inserted] = found.try_emplace(std::move(key), std::move(ideal));
    if (inserted) {
      if (found.size() > limits.max_ideals)
        fail(ErrorKind::TooLarge, "more than " +
                                      std::to_string(limits.max_ideals) +
                                      " ideals");
      fresh.push_back(&it->second);
    }
  };
  const auto n = static_cast<ElementId>(r->order());
  for (ElementId a = 0; a < n; ++a) record(principal(r, a));
  // Every ideal is a finite sum of principal ideals; close under sums.
  std::vector<const Ideal*> known;
  while (!fresh.empty()) {
    auto batch = std::move(fresh);
    fresh.clear();
    for (const auto* x : batch) known.push_back(x);
    for (const auto* x : batch)
      for (std::size_t i = 0; i < known.size(); ++i)
        record(ideal_sum(*x, *known[i]));
  }
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (auto& [key, ideal] : found) out.push_back(std::move(ideal));
  std::sort(out.begin(), out.end());
  return out;
}

IdealLattice::IdealLattice(RingHandle r, EnumerationLimits limits)
    : ring_(std::move(r)), ideals_(enumerate_ideals(ring_, limits)) {
  for (const auto& i : ideals_)
    if (i.is_proper()) proper_.push_back(i);
  for (const auto& i : proper_) {
    const bool dominated = std::any_of(
        proper_.begin(), proper_.end(), [&](const Ideal& j) {
          return j.size() > i.size() && i.subset_of(j);
        });
    if (!dominated) maximal_.push_back(i);
  }
}

std::optional<std::size_t> IdealLattice::index_of(const Ideal& a) const {
  auto it = std::lower_bound(ideals_.begin(), ideals_.end(), a);
  if (it == ideals_.end() || !(*it == a)) return std::nullopt;
  return static_cast<std::size_t>(it - ideals_.begin());
}

bool IdealLattice::is_von_neumann_regular() const {
  return std::all_of(ideals_.begin(), ideals_.end(), [](const Ideal& i) {
    return ideal_product(i, i) == i;
  });
}

std::vector<Ideal> maximal_ideals(const RingHandle& r) {
  return IdealLattice(r).maximal();
}

bool is_quasi_local(const RingHandle& r) {
  return IdealLattice(r).is_quasi_local();
}

bool is_von_neumann_regular(const RingHandle& r) {
  return IdealLattice(r).is_von_neumann_regular();
}

}  // namespace absorb
