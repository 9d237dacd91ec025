#include <algorithm>
#include <memory>

#include "absorb/classify.hpp"

namespace absorb {

namespace {

constexpr std::size_t kMaxProperIdealsForTriples = 256;

// Distinct values xy ∉ I over nonunit pairs x, y.
std::vector<ElementId> outside_products(const Ideal& i) {
  const auto& r = *i.ring();
  const auto nu = r.nonunits();
  std::vector<std::uint8_t> seen(r.order(), 0);
  for (auto x : nu)
    for (auto y : nu) {
      const auto p = r.mul_fast(x, y);
      if (!i.contains(p)) seen[p] = 1;
    }
  std::vector<ElementId> out;
  for (ElementId p = 0; p < r.order(); ++p)
    if (seen[p]) out.push_back(p);
  return out;
}

// (I : p) = I ∪ (φ(I) : p) as sets, or the weaker either/or form.
bool colon_variant(const Ideal& i, const PhiValue& phi, bool either_or) {
  const auto& r = *i.ring();
  const auto n = static_cast<ElementId>(r.order());
  for (auto p : outside_products(i)) {
    bool union_ok = true, equals_i = true, equals_phi = true;
    for (ElementId t = 0; t < n; ++t) {
      const auto tp = r.mul_fast(t, p);
      const bool in_colon = i.contains(tp);
      const bool in_phi_colon = phi.contains(tp);
      union_ok &= in_colon == (i.contains(t) || in_phi_colon);
      equals_i &= in_colon == i.contains(t);
      equals_phi &= in_colon == in_phi_colon;
    }
    if (either_or ? !(equals_i || equals_phi) : !union_ok) return false;
  }
  return true;
}

// a·J ⊆ I and a·J ⊄ φ(I), for an element a.
bool scaled_in_i_not_phi(const Ideal& i, const PhiValue& phi, ElementId a,
                         const Ideal& j) {
  const auto& r = *i.ring();
  bool escapes_phi = false;
  for (auto e : j.elements()) {
    const auto v = r.mul_fast(a, e);
    if (!i.contains(v)) return false;
    escapes_phi |= !phi.contains(v);
  }
  return escapes_phi;
}

bool scaled_subset(const Ideal& i, ElementId a, const Ideal& j) {
  const auto& r = *i.ring();
  return std::all_of(j.elements().begin(), j.elements().end(),
                     [&](ElementId e) { return i.contains(r.mul_fast(a, e)); });
}

bool in_i_not_phi(const Ideal& i, const PhiValue& phi, const Ideal& a) {
  return a.subset_of(i) && !phi.contains_all(a);
}

// Products of proper ideals, indexed by position in lattice.proper().
class ProperProducts {
 public:
  explicit ProperProducts(const IdealLattice& lattice)
      : proper_(lattice.proper()), n_(proper_.size()) {
    if (n_ > kMaxProperIdealsForTriples)
      fail(ErrorKind::TooLarge, "ideal-triple characterization limited to " +
                                    std::to_string(kMaxProperIdealsForTriples) +
                                    " proper ideals");
    table_.reserve(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        table_.push_back(b < a ? table_[b * n_ + a]
                               : ideal_product(proper_[a], proper_[b]));
  }

  std::size_t size() const noexcept { return n_; }
  const Ideal& ideal(std::size_t a) const { return proper_[a]; }
  const Ideal& product(std::size_t a, std::size_t b) const {
    return table_[a * n_ + b];
  }

 private:
  const std::vector<Ideal>& proper_;
  std::size_t n_;
  std::vector<Ideal> table_;
};

}  // namespace

bool tmm_check(const Ideal& i, const PhiValue& phi, int variant,
               const IdealLattice* lattice) {
  if (!i.is_proper())
    fail(ErrorKind::InvalidInput, "characterization needs a proper ideal");
  if (i.ring() != phi.ring())
    fail(ErrorKind::WrongRing, "φ value belongs to another ring");
  if (variant < 1 || variant > 6)
    fail(ErrorKind::InvalidInput, "variant must be 1..6");
  if (variant == 1) return is_phi_one_absorbing_prime(i, phi).holds;
  if (variant == 2) return colon_variant(i, phi, false);
  if (variant == 3) return colon_variant(i, phi, true);

  std::unique_ptr<IdealLattice> owned;
  if (!lattice) {
    owned = std::make_unique<IdealLattice>(i.ring());
    lattice = owned.get();
  } else if (lattice->ring() != i.ring()) {
    fail(ErrorKind::WrongRing, "lattice of another ring");
  }
  const auto& r = *i.ring();

  if (variant == 4) {
    for (auto p : outside_products(i))
      for (const auto& j : lattice->proper())
        if (scaled_in_i_not_phi(i, phi, p, j) && !j.subset_of(i)) return false;
    return true;
  }

  const ProperProducts products(*lattice);
  if (variant == 5) {
    for (auto x : r.nonunits())
      for (std::size_t a = 0; a < products.size(); ++a)
        for (std::size_t b = 0; b < products.size(); ++b) {
          if (!scaled_in_i_not_phi(i, phi, x, products.product(a, b))) continue;
          if (!scaled_subset(i, x, products.ideal(a)) &&
              !products.ideal(b).subset_of(i))
            return false;
        }
    return true;
  }

  for (std::size_t a = 0; a < products.size(); ++a)
    for (std::size_t b = 0; b < products.size(); ++b) {
      const auto& jk = products.product(a, b);
      const bool jk_in_i = jk.subset_of(i);
      for (std::size_t c = 0; c < products.size(); ++c) {
        if (jk_in_i || products.ideal(c).subset_of(i)) continue;
        if (in_i_not_phi(i, phi, ideal_product(jk, products.ideal(c))))
          return false;
      }
    }
  return true;
}

bool tmm_check(const Ideal& i, const PhiDescriptor& phi, int variant,
               const IdealLattice* lattice) {
  return tmm_check(i, eval_phi(phi, i), variant, lattice);
}

}  // namespace absorb
