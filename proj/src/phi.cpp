#include "absorb/phi.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

namespace absorb {

namespace {

std::mutex g_anomaly_mutex;
std::vector<std::string> g_anomalies;

void record_anomaly(std::string what) {
  std::lock_guard lock(g_anomaly_mutex);
  g_anomalies.push_back(std::move(what));
}

// Transported values must stay inside the input ideal; anything outside is
// cut away and logged.
PhiValue clamp_to(const Ideal& value, const Ideal& input,
                  const PhiDescriptor& phi) {
  if (value.subset_of(input)) return PhiValue::of(value);
  record_anomaly(phi.to_string() + " escaped its input ideal in " +
                 input.ring()->spec());
  return PhiValue::of(ideal_intersection(value, input));
}

}  // namespace

PhiDescriptor PhiDescriptor::empty() { return PhiDescriptor(); }

PhiDescriptor PhiDescriptor::zero() {
  PhiDescriptor d;
  d.kind_ = Kind::Zero;
  return d;
}

PhiDescriptor PhiDescriptor::power(unsigned m) {
  if (m == 0) fail(ErrorKind::InvalidExponent, "pow:0 is not a φ-map");
  PhiDescriptor d;
  d.kind_ = Kind::Power;
  d.exponent_ = m;
  return d;
}

PhiDescriptor PhiDescriptor::omega() {
  PhiDescriptor d;
  d.kind_ = Kind::Omega;
  return d;
}

PhiDescriptor PhiDescriptor::product(std::vector<PhiDescriptor> parts) {
  if (parts.empty())
    fail(ErrorKind::InvalidInput, "product φ needs at least one part");
  PhiDescriptor d;
  d.kind_ = Kind::Product;
  d.parts_ = std::move(parts);
  return d;
}

PhiDescriptor PhiDescriptor::quotient(PhiDescriptor base, Ideal modulus) {
  PhiDescriptor d;
  d.kind_ = Kind::Quotient;
  d.parts_.push_back(std::move(base));
  d.modulus_ = std::move(modulus);
  return d;
}

PhiDescriptor PhiDescriptor::localized(PhiDescriptor base, MultSet s) {
  PhiDescriptor d;
  d.kind_ = Kind::Localized;
  d.parts_.push_back(std::move(base));
  d.mult_set_ = std::move(s);
  return d;
}

std::string PhiDescriptor::to_string() const {
  switch (kind_) {
    case Kind::Empty: return "empty";
    case Kind::Zero: return "zero";
    case Kind::Power: return "pow:" + std::to_string(exponent_);
    case Kind::Omega: return "omega";
    case Kind::Product: {
      std::string out = "prod(";
      for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) out += ',';
        out += parts_[k].to_string();
      }
      return out + ")";
    }
    case Kind::Quotient: return "quot(" + parts_[0].to_string() + ")";
    case Kind::Localized: return "loc(" + parts_[0].to_string() + ")";
  }
  return {};
}

PhiValue PhiValue::empty_marker(RingHandle ring) {
  PhiValue v;
  v.ring_ = std::move(ring);
  return v;
}

PhiValue PhiValue::of(Ideal ideal) {
  PhiValue v;
  v.ring_ = ideal.ring();
  v.empty_ = false;
  v.elements_.assign(ideal.elements().begin(), ideal.elements().end());
  v.member_.assign(v.ring_->order(), 0);
  for (auto x : v.elements_) v.member_[x] = 1;
  v.ideal_ = std::move(ideal);
  return v;
}

PhiValue PhiValue::from_set(RingHandle ring, std::vector<ElementId> elements) {
  PhiValue v;
  v.ring_ = std::move(ring);
  v.empty_ = false;
  for (auto x : elements) v.ring_->check_element(x);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  v.elements_ = std::move(elements);
  v.member_.assign(v.ring_->order(), 0);
  for (auto x : v.elements_) v.member_[x] = 1;
  return v;
}

bool PhiValue::contains_all(const Ideal& a) const {
  if (a.ring() != ring_) fail(ErrorKind::WrongRing, "φ value of another ring");
  return std::all_of(a.elements().begin(), a.elements().end(),
                     [&](ElementId x) { return contains(x); });
}

bool PhiValue::equals(const Ideal& a) const {
  if (empty_) return false;
  return a.ring() == ring_ &&
         std::equal(elements_.begin(), elements_.end(), a.elements().begin(),
                    a.elements().end());
}

PhiValue eval_phi_any(const PhiDescriptor& phi, const Ideal& i) {
  using Kind = PhiDescriptor::Kind;
  const auto& r = i.ring();
  switch (phi.kind()) {
    case Kind::Empty:
      return PhiValue::empty_marker(r);
    case Kind::Zero:
      return PhiValue::of(zero_ideal(r));
    case Kind::Power:
      return PhiValue::of(ideal_power(i, phi.exponent()));
    case Kind::Omega:
      return PhiValue::of(omega_power(i));
    case Kind::Product: {
      if (r->kind() != RingKind::Product ||
          r->factors().size() != phi.parts().size())
        fail(ErrorKind::InvalidInput,
             phi.to_string() + " needs a product ring with " +
                 std::to_string(phi.parts().size()) + " factors, got " +
                 r->spec());
      auto components = factor_ideal(i);
      if (!components)
        fail(ErrorKind::InvalidInput, "ideal does not split over the factors");
      std::vector<Ideal> values;
      for (std::size_t k = 0; k < components->size(); ++k) {
        auto v = eval_phi_any(phi.parts()[k], (*components)[k]);
        // φ₁(I₁) × ∅ is the empty set.
        if (v.is_empty_marker()) return PhiValue::empty_marker(r);
        values.push_back(*v.ideal());
      }
      return clamp_to(product_ideal(r, values), i, phi);
    }
    case Kind::Quotient: {
      const auto& modulus = *phi.modulus();
      if (r->kind() != RingKind::Quotient || r->base() != modulus.ring() ||
          !std::equal(r->kernel().begin(), r->kernel().end(),
                      modulus.elements().begin(), modulus.elements().end()))
        fail(ErrorKind::InvalidInput,
             phi.to_string() + " does not match ring " + r->spec());
      auto v = eval_phi_any(phi.parts()[0], preimage(i));
      if (v.is_empty_marker()) return PhiValue::empty_marker(r);
      // (φ(I) + J)/J: the image already absorbs J.
      return clamp_to(image(*v.ideal(), r), i, phi);
    }
    case Kind::Localized: {
      const auto& s = *phi.mult_set();
      if (r->kind() != RingKind::Localization || r->base() != s.ring() ||
          r->mult_closure() != s.closure())
        fail(ErrorKind::InvalidInput,
             phi.to_string() + " does not match ring " + r->spec());
      auto v = eval_phi_any(phi.parts()[0], preimage(i));
      if (v.is_empty_marker()) return PhiValue::empty_marker(r);
      return clamp_to(image(*v.ideal(), r), i, phi);
    }
  }
  fail(ErrorKind::InvalidInput, "unknown φ kind");
}

PhiValue eval_phi(const PhiDescriptor& phi, const Ideal& i) {
  if (!i.is_proper())
    fail(ErrorKind::InvalidInput, "φ is evaluated on proper ideals only");
  return eval_phi_any(phi, i);
}

bool phi_leq(const PhiDescriptor& phi, const PhiDescriptor& psi,
             const RingHandle& r) {
  IdealLattice lattice(r);
  for (const auto& i : lattice.proper()) {
    const auto a = eval_phi(phi, i);
    if (a.is_empty_marker()) continue;
    const auto b = eval_phi(psi, i);
    if (b.is_empty_marker()) return false;
    for (auto x : a.elements())
      if (!b.contains(x)) return false;
  }
  return true;
}

PhiEvaluator standard_evaluator() {
  return [](const PhiDescriptor& phi, const Ideal& i) {
    return eval_phi(phi, i);
  };
}

std::vector<std::string> phi_anomalies() {
  std::lock_guard lock(g_anomaly_mutex);
  return g_anomalies;
}

void clear_phi_anomalies() {
  std::lock_guard lock(g_anomaly_mutex);
  g_anomalies.clear();
}

// ---------------------------------------------------------------------------
// φ-spec parsing

std::string PhiSpec::to_string() const {
  using Kind = PhiDescriptor::Kind;
  switch (kind) {
    case Kind::Empty: return "empty";
    case Kind::Zero: return "zero";
    case Kind::Power: return "pow:" + std::to_string(exponent);
    case Kind::Omega: return "omega";
    case Kind::Product: {
      std::string out = "prod(";
      for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) out += ',';
        out += parts[k].to_string();
      }
      return out + ")";
    }
    case Kind::Quotient: return "quot(" + parts[0].to_string() + ")";
    case Kind::Localized: return "loc(" + parts[0].to_string() + ")";
  }
  return {};
}

namespace {

class PhiParser {
 public:
  explicit PhiParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
  }

  std::vector<PhiSpec> list() {
    std::vector<PhiSpec> out;
    if (text_.empty()) return out;
    out.push_back(one());
    while (eat(',')) out.push_back(one());
    expect_end();
    return out;
  }

  PhiSpec single() {
    auto s = one();
    expect_end();
    return s;
  }

 private:
  using Kind = PhiDescriptor::Kind;

  PhiSpec one() {
    PhiSpec s;
    if (eat_word("empty")) {
      s.kind = Kind::Empty;
    } else if (eat_word("zero")) {
      s.kind = Kind::Zero;
    } else if (eat_word("omega")) {
      s.kind = Kind::Omega;
    } else if (eat_word("pow:")) {
      s.kind = Kind::Power;
      s.exponent = number();
      if (s.exponent == 0)
        fail(ErrorKind::ParseError, "pow:<m> needs m >= 1");
    } else if (eat_word("prod(")) {
      s.kind = Kind::Product;
      s.parts.push_back(one());
      while (eat(',')) s.parts.push_back(one());
      require(')');
    } else if (eat_word("quot(")) {
      s.kind = Kind::Quotient;
      s.parts.push_back(one());
      require(')');
    } else if (eat_word("loc(")) {
      s.kind = Kind::Localized;
      s.parts.push_back(one());
      require(')');
    } else {
      error("expected a φ-spec");
    }
    return s;
  }

  unsigned number() {
    std::size_t start = pos_;
    unsigned long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > 1000000) error("exponent too large");
      ++pos_;
    }
    if (pos_ == start) error("expected a number");
    return static_cast<unsigned>(v);
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_word(std::string_view w) {
    if (text_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  void require(char c) {
    if (!eat(c)) error(std::string("expected '") + c + "'");
  }

  void expect_end() {
    if (pos_ != text_.size()) error("trailing input");
  }

  [[noreturn]] void error(const std::string& what) {
    fail(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) +
                                    " in φ-spec '" + text_ + "'");
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

PhiSpec parse_phi_spec(std::string_view text) {
  return PhiParser(text).single();
}

std::vector<PhiSpec> parse_phi_list(std::string_view text) {
  return PhiParser(text).list();
}

PhiDescriptor bind_phi(const PhiSpec& spec, const RingHandle& r) {
  using Kind = PhiDescriptor::Kind;
  switch (spec.kind) {
    case Kind::Empty: return PhiDescriptor::empty();
    case Kind::Zero: return PhiDescriptor::zero();
    case Kind::Power: return PhiDescriptor::power(spec.exponent);
    case Kind::Omega: return PhiDescriptor::omega();
    case Kind::Product: {
      if (r->kind() != RingKind::Product ||
          r->factors().size() != spec.parts.size())
        fail(ErrorKind::InvalidInput, spec.to_string() +
                                          " does not match the factors of " +
                                          r->spec());
      std::vector<PhiDescriptor> parts;
      for (std::size_t k = 0; k < spec.parts.size(); ++k)
        parts.push_back(bind_phi(spec.parts[k], r->factors()[k]));
      return PhiDescriptor::product(std::move(parts));
    }
    case Kind::Quotient:
      if (r->kind() != RingKind::Quotient)
        fail(ErrorKind::InvalidInput, spec.to_string() +
                                          " needs a quotient ring, got " +
                                          r->spec());
      return PhiDescriptor::quotient(bind_phi(spec.parts[0], r->base()),
                                     quotient_modulus(r));
    case Kind::Localized:
      if (r->kind() != RingKind::Localization)
        fail(ErrorKind::InvalidInput, spec.to_string() +
                                          " needs a localization, got " +
                                          r->spec());
      return PhiDescriptor::localized(bind_phi(spec.parts[0], r->base()),
                                      MultSet(r->base(), r->mult_generators()));
  }
  fail(ErrorKind::InvalidInput, "unknown φ kind");
}

}  // namespace absorb
