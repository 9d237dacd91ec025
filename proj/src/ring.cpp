#include "absorb/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "absorb/ideal.hpp"

namespace absorb {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::InvalidSpec: return "invalid-spec";
    case ErrorKind::InvalidQuotient: return "invalid-quotient";
    case ErrorKind::ZeroRing: return "zero-ring";
    case ErrorKind::WrongRing: return "wrong-ring";
    case ErrorKind::AxiomViolation: return "axiom-violation";
    case ErrorKind::TooLarge: return "too-large";
    case ErrorKind::InvalidExponent: return "invalid-exponent";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::PreconditionViolated: return "precondition-violated";
    case ErrorKind::ParseError: return "parse-error";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

namespace {

// Quotient and table rings find units by scanning for inverses.
constexpr std::uint64_t kScanUnitOrder = std::uint64_t{1} << 16;
constexpr std::uint64_t kUnitCacheOrder = std::uint64_t{1} << 24;

std::string join_ids(const std::vector<ElementId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ids[i]);
  }
  return out;
}

}  // namespace

struct RingBuilder {
  static std::shared_ptr<Ring> blank(RingKind kind, std::uint64_t order) {
    if (order < 2) fail(ErrorKind::InvalidOrder, "ring order must be >= 2");
    if (order > kMaxRingOrder)
      fail(ErrorKind::TooLarge, "ring order " + std::to_string(order) +
                                    " exceeds 2^32");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = kind;
    r->order_ = order;
    return r;
  }

  // Fills the arithmetic and unit caches.
  static RingHandle finish(std::shared_ptr<Ring> r) {
    const auto n = r->order_;
    if (n <= kTableCacheOrder && r->add_table_.empty()) {
      std::vector<ElementId> add(n * n), mul(n * n);
      for (ElementId a = 0; a < n; ++a) {
        for (ElementId b = a; b < n; ++b) {
          const auto s = r->add_slow(a, b);
          const auto p = r->mul_slow(a, b);
          add[a * n + b] = add[b * n + a] = s;
          mul[a * n + b] = mul[b * n + a] = p;
        }
      }
      r->add_table_ = std::move(add);
      r->mul_table_ = std::move(mul);
    }
    if (n <= kTableCacheOrder && r->neg_table_.empty()) {
      r->neg_table_.resize(n);
      for (ElementId a = 0; a < n; ++a) {
        for (ElementId b = 0; b < n; ++b) {
          if (r->add_fast(a, b) == 0) {
            r->neg_table_[a] = b;
            break;
          }
        }
      }
    }
    if (r->one_ == 0) fail(ErrorKind::ZeroRing, "identity equals zero");
    if (n <= kUnitCacheOrder) {
      if ((r->kind_ == RingKind::Quotient ||
           r->kind_ == RingKind::Localization ||
           r->kind_ == RingKind::Table) &&
          n > kScanUnitOrder) {
        fail(ErrorKind::TooLarge, "unit detection by scan limited to order " +
                                      std::to_string(kScanUnitOrder));
      }
      r->unit_flags_.assign(n, 0);
      for (ElementId x = 0; x < n; ++x) {
        if (r->is_unit_slow(x)) {
          r->unit_flags_[x] = 1;
          r->units_.push_back(x);
        }
      }
    }
    return r;
  }

  static RingHandle quotient(RingKind kind, const RingHandle& base,
                             std::span<const ElementId> kernel,
                             std::vector<ElementId> kernel_gens,
                             const MultSet* mult_set = nullptr) {
    const auto n = base->order();
    const auto k = kernel.size();
    if (k == n)
      fail(ErrorKind::InvalidQuotient, "modulus is the whole ring");
    if (n % k != 0)
      fail(ErrorKind::InvalidQuotient, "modulus is not an additive subgroup");
    auto r = blank(kind, n / k);
    r->base_ = base;
    r->kernel_.assign(kernel.begin(), kernel.end());
    r->kernel_gens_ = std::move(kernel_gens);
    constexpr ElementId kUnassigned = ~ElementId{0};
    r->proj_.assign(n, kUnassigned);
    r->rep_.reserve(n / k);
    // Ascending scan: the first unseen element is the minimal
    // representative of its coset, so ids follow sorted representatives.
    for (ElementId b = 0; b < n; ++b) {
      if (r->proj_[b] != kUnassigned) continue;
      const auto id = static_cast<ElementId>(r->rep_.size());
      r->rep_.push_back(b);
      for (auto j : kernel) r->proj_[base->add_fast(b, j)] = id;
    }
    r->one_ = r->proj_[base->one()];
    if (mult_set) {
      r->mult_closure_ = mult_set->closure();
      r->mult_gens_ = mult_set->generators();
    }
    return finish(std::move(r));
  }
};

void Ring::check_element(ElementId x) const {
  if (x >= order_)
    fail(ErrorKind::WrongRing, "element id " + std::to_string(x) +
                                   " outside ring of order " +
                                   std::to_string(order_));
}

ElementId Ring::add(ElementId a, ElementId b) const {
  check_element(a);
  check_element(b);
  return add_fast(a, b);
}

ElementId Ring::mul(ElementId a, ElementId b) const {
  check_element(a);
  check_element(b);
  return mul_fast(a, b);
}

ElementId Ring::neg(ElementId a) const {
  check_element(a);
  return neg_fast(a);
}

ElementId Ring::sub(ElementId a, ElementId b) const {
  check_element(a);
  check_element(b);
  return add_fast(a, neg_fast(b));
}

bool Ring::is_unit(ElementId x) const {
  check_element(x);
  return is_unit_fast(x);
}

const std::vector<ElementId>& Ring::units() const {
  if (unit_flags_.empty())
    fail(ErrorKind::TooLarge, "unit set not cached for order " +
                                  std::to_string(order_));
  return units_;
}

std::vector<ElementId> Ring::nonunits() const {
  if (unit_flags_.empty())
    fail(ErrorKind::TooLarge, "unit set not cached for order " +
                                  std::to_string(order_));
  std::vector<ElementId> out;
  out.reserve(order_ - units_.size());
  for (ElementId x = 0; x < order_; ++x)
    if (!unit_flags_[x]) out.push_back(x);
  return out;
}

ElementId Ring::neg_fast(ElementId a) const noexcept {
  if (!neg_table_.empty()) return neg_table_[a];
  switch (kind_) {
    case RingKind::Zn:
      return static_cast<ElementId>((modulus_ - a) % modulus_);
    case RingKind::Product: {
      std::uint64_t out = 0;
      for (std::size_t k = 0; k < factors_.size(); ++k) {
        const auto c = (a / strides_[k]) % factors_[k]->order();
        out += factors_[k]->neg_fast(static_cast<ElementId>(c)) * strides_[k];
      }
      return static_cast<ElementId>(out);
    }
    case RingKind::Quotient:
    case RingKind::Localization:
      return proj_[base_->neg_fast(rep_[a])];
    case RingKind::Table:
      break;
  }
  return 0;
}

ElementId Ring::add_slow(ElementId a, ElementId b) const noexcept {
  switch (kind_) {
    case RingKind::Zn:
      return static_cast<ElementId>((std::uint64_t{a} + b) % modulus_);
    case RingKind::Product: {
      std::uint64_t out = 0;
      for (std::size_t k = 0; k < factors_.size(); ++k) {
        const auto o = factors_[k]->order();
        const auto ca = static_cast<ElementId>((a / strides_[k]) % o);
        const auto cb = static_cast<ElementId>((b / strides_[k]) % o);
        out += factors_[k]->add_fast(ca, cb) * strides_[k];
      }
      return static_cast<ElementId>(out);
    }
    case RingKind::Quotient:
    case RingKind::Localization:
      return proj_[base_->add_fast(rep_[a], rep_[b])];
    case RingKind::Table:
      break;
  }
  return 0;
}

ElementId Ring::mul_slow(ElementId a, ElementId b) const noexcept {
  switch (kind_) {
    case RingKind::Zn:
      return static_cast<ElementId>((std::uint64_t{a} * b) % modulus_);
    case RingKind::Product: {
      std::uint64_t out = 0;
      for (std::size_t k = 0; k < factors_.size(); ++k) {
        const auto o = factors_[k]->order();
        const auto ca = static_cast<ElementId>((a / strides_[k]) % o);
        const auto cb = static_cast<ElementId>((b / strides_[k]) % o);
        out += factors_[k]->mul_fast(ca, cb) * strides_[k];
      }
      return static_cast<ElementId>(out);
    }
    case RingKind::Quotient:
    case RingKind::Localization:
      return proj_[base_->mul_fast(rep_[a], rep_[b])];
    case RingKind::Table:
      break;
  }
  return 0;
}

bool Ring::is_unit_slow(ElementId x) const noexcept {
  switch (kind_) {
    case RingKind::Zn:
      return std::gcd(std::uint64_t{x}, modulus_) == 1;
    case RingKind::Product:
      for (std::size_t k = 0; k < factors_.size(); ++k) {
        const auto c = (x / strides_[k]) % factors_[k]->order();
        if (!factors_[k]->is_unit_fast(static_cast<ElementId>(c)))
          return false;
      }
      return true;
    case RingKind::Quotient:
    case RingKind::Localization:
    case RingKind::Table:
      for (ElementId y = 0; y < order_; ++y)
        if (mul_fast(x, y) == one_) return true;
      return false;
  }
  return false;
}

ElementId Ring::component(ElementId x, std::size_t k) const {
  check_element(x);
  if (kind_ != RingKind::Product || k >= factors_.size())
    fail(ErrorKind::InvalidInput, "component() needs a product ring factor");
  return static_cast<ElementId>((x / strides_[k]) % factors_[k]->order());
}

ElementId Ring::compose(std::span<const ElementId> parts) const {
  if (kind_ != RingKind::Product || parts.size() != factors_.size())
    fail(ErrorKind::InvalidInput, "compose() needs one part per factor");
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    factors_[k]->check_element(parts[k]);
    out += parts[k] * strides_[k];
  }
  return static_cast<ElementId>(out);
}

ElementId Ring::project(ElementId base_element) const {
  if (kind_ != RingKind::Quotient && kind_ != RingKind::Localization)
    fail(ErrorKind::InvalidInput, "project() needs a quotient ring");
  base_->check_element(base_element);
  return proj_[base_element];
}

ElementId Ring::representative(ElementId x) const {
  if (kind_ != RingKind::Quotient && kind_ != RingKind::Localization)
    fail(ErrorKind::InvalidInput, "representative() needs a quotient ring");
  check_element(x);
  return rep_[x];
}

std::string Ring::spec() const {
  switch (kind_) {
    case RingKind::Zn:
      return "Zn:" + std::to_string(modulus_);
    case RingKind::Product: {
      std::string out = "prod(";
      for (std::size_t k = 0; k < factors_.size(); ++k) {
        if (k) out += ',';
        out += factors_[k]->spec();
      }
      return out + ")";
    }
    case RingKind::Quotient:
      return "quot(" + base_->spec() + ",I(" + join_ids(kernel_gens_) + "))";
    case RingKind::Localization:
      return "loc(" + base_->spec() + ",S(" + join_ids(mult_gens_) + "))";
    case RingKind::Table:
      return "table:" + std::to_string(order_);
  }
  return {};
}

std::string Ring::format_element(ElementId x) const {
  check_element(x);
  switch (kind_) {
    case RingKind::Product: {
      std::string out = "(";
      for (std::size_t k = 0; k < factors_.size(); ++k) {
        if (k) out += ',';
        out += factors_[k]->format_element(component(x, k));
      }
      return out + ")";
    }
    case RingKind::Quotient:
    case RingKind::Localization:
      return "[" + base_->format_element(rep_[x]) + "]";
    default:
      return std::to_string(x);
  }
}

MultSet::MultSet(RingHandle ring, std::vector<ElementId> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)) {
  if (ring_->order() > kMaxIdealRingOrder)
    fail(ErrorKind::TooLarge, "multiplicative closure needs order <= 2^24");
  for (auto g : gens_) ring_->check_element(g);
  std::vector<std::uint8_t> seen(ring_->order(), 0);
  std::vector<ElementId> pending(gens_.begin(), gens_.end());
  pending.push_back(ring_->one());
  while (!pending.empty()) {
    const auto g = pending.back();
    pending.pop_back();
    if (seen[g]) continue;
    seen[g] = 1;
    closure_.push_back(g);
    for (auto c : closure_) pending.push_back(ring_->mul_fast(c, g));
  }
  std::sort(closure_.begin(), closure_.end());
  if (seen[0])
    fail(ErrorKind::ZeroRing,
         "multiplicative set contains 0; the localization is the zero ring");
}

bool MultSet::contains(ElementId x) const {
  return std::binary_search(closure_.begin(), closure_.end(), x);
}

RingHandle make_zn(std::uint64_t n) {
  auto r = RingBuilder::blank(RingKind::Zn, n);
  r->modulus_ = n;
  r->one_ = 1;
  return RingBuilder::finish(std::move(r));
}

RingHandle make_product(std::vector<RingHandle> factors) {
  if (factors.empty())
    fail(ErrorKind::InvalidSpec, "product of an empty factor list");
  std::uint64_t order = 1;
  for (const auto& f : factors) {
    if (!f) fail(ErrorKind::InvalidSpec, "null factor");
    order *= f->order();
    if (order > kMaxRingOrder)
      fail(ErrorKind::TooLarge, "product order exceeds 2^32");
  }
  auto r = RingBuilder::blank(RingKind::Product, order);
  r->strides_.assign(factors.size(), 1);
  for (std::size_t k = factors.size() - 1; k > 0; --k)
    r->strides_[k - 1] = r->strides_[k] * factors[k]->order();
  std::uint64_t one = 0;
  for (std::size_t k = 0; k < factors.size(); ++k)
    one += factors[k]->one() * r->strides_[k];
  r->one_ = static_cast<ElementId>(one);
  r->factors_ = std::move(factors);
  return RingBuilder::finish(std::move(r));
}

RingHandle make_quotient(const Ideal& modulus) {
  if (!modulus.is_proper())
    fail(ErrorKind::InvalidQuotient,
         "quotient by the whole ring would make 1 = 0");
  return RingBuilder::quotient(
      RingKind::Quotient, modulus.ring(), modulus.elements(),
      std::vector<ElementId>(modulus.generators().begin(),
                             modulus.generators().end()));
}

RingHandle make_localization(const MultSet& s) {
  const auto& base = s.ring();
  IdealBuilder torsion(base);
  for (ElementId r = 0; r < base->order(); ++r) {
    for (auto x : s.closure()) {
      if (base->mul_fast(x, r) == 0) {
        torsion.insert(r);
        break;
      }
    }
  }
  const Ideal kernel = std::move(torsion).build_canonical();
  return RingBuilder::quotient(
      RingKind::Localization, base, kernel.elements(),
      std::vector<ElementId>(kernel.generators().begin(),
                             kernel.generators().end()),
      &s);
}

RingHandle make_table_ring(std::uint64_t order, std::vector<ElementId> add,
                           std::vector<ElementId> mul) {
  if (order > kAxiomCheckOrder)
    fail(ErrorKind::TooLarge, "table rings are limited to order " +
                                  std::to_string(kAxiomCheckOrder));
  auto r = RingBuilder::blank(RingKind::Table, order);
  if (add.size() != order * order || mul.size() != order * order)
    fail(ErrorKind::InvalidSpec, "tables must have order^2 entries");
  for (auto v : add)
    if (v >= order) fail(ErrorKind::InvalidSpec, "table entry out of range");
  for (auto v : mul)
    if (v >= order) fail(ErrorKind::InvalidSpec, "table entry out of range");
  for (ElementId x = 0; x < order; ++x)
    if (add[x] != x || add[x * order] != x)
      fail(ErrorKind::AxiomViolation, "id 0 is not the additive zero");
  std::optional<ElementId> one;
  for (ElementId e = 1; e < order && !one; ++e) {
    bool ok = true;
    for (ElementId x = 0; x < order && ok; ++x)
      ok = mul[e * order + x] == x && mul[x * order + e] == x;
    if (ok) one = e;
  }
  if (!one)
    fail(ErrorKind::AxiomViolation, "no nonzero multiplicative identity");
  r->one_ = *one;
  r->add_table_ = std::move(add);
  r->mul_table_ = std::move(mul);
  auto ring = RingBuilder::finish(std::move(r));
  if (auto violation = find_axiom_violation(*ring))
    fail(ErrorKind::AxiomViolation, *violation);
  return ring;
}

std::optional<std::string> find_axiom_violation(const Ring& r,
                                                std::uint64_t bound) {
  const auto n = r.order();
  if (n > bound)
    fail(ErrorKind::TooLarge, "axiom check bound is " + std::to_string(bound));
  auto describe = [](const char* law, ElementId a, ElementId b, ElementId c) {
    std::ostringstream os;
    os << law << " fails at (" << a << "," << b << "," << c << ")";
    return os.str();
  };
  if (r.one() == 0) return "1 == 0";
  for (ElementId a = 0; a < n; ++a) {
    if (r.add_fast(a, 0) != a) return describe("additive identity", a, 0, 0);
    if (r.mul_fast(a, r.one()) != a)
      return describe("multiplicative identity", a, r.one(), 0);
    if (r.add_fast(a, r.neg_fast(a)) != 0)
      return describe("additive inverse", a, r.neg_fast(a), 0);
    for (ElementId b = 0; b < n; ++b) {
      if (r.add_fast(a, b) != r.add_fast(b, a))
        return describe("additive commutativity", a, b, 0);
      if (r.mul_fast(a, b) != r.mul_fast(b, a))
        return describe("multiplicative commutativity", a, b, 0);
      const auto ab_sum = r.add_fast(a, b);
      const auto ab_prod = r.mul_fast(a, b);
      for (ElementId c = 0; c < n; ++c) {
        if (r.add_fast(ab_sum, c) != r.add_fast(a, r.add_fast(b, c)))
          return describe("additive associativity", a, b, c);
        if (r.mul_fast(ab_prod, c) != r.mul_fast(a, r.mul_fast(b, c)))
          return describe("multiplicative associativity", a, b, c);
        if (r.mul_fast(a, r.add_fast(b, c)) !=
            r.add_fast(ab_prod, r.mul_fast(a, c)))
          return describe("distributivity", a, b, c);
      }
    }
  }
  return std::nullopt;
}

}  // namespace absorb
