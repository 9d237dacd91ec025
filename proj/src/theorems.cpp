#include "absorb/theorems.hpp"

#include <algorithm>
#include <map>

namespace absorb {

std::string_view to_string(VerdictStatus s) noexcept {
  switch (s) {
    case VerdictStatus::Pass: return "pass";
    case VerdictStatus::Fail: return "fail";
    case VerdictStatus::NotApplicable: return "not-applicable";
    case VerdictStatus::Info: return "info";
    case VerdictStatus::Error: return "error";
  }
  return "unknown";
}

std::vector<PhiDescriptor> SuiteOptions::default_phis() {
  return {PhiDescriptor::empty(),    PhiDescriptor::zero(),
          PhiDescriptor::power(2),   PhiDescriptor::power(3),
          PhiDescriptor::omega(),    PhiDescriptor::power(1)};
}

namespace {

std::vector<ElementId> gens_of(const Ideal& i) {
  return {i.generators().begin(), i.generators().end()};
}

Instance instance(const Ideal& i, std::string phi, std::string claim,
                  std::optional<Witness> w = std::nullopt,
                  std::vector<ElementId> elements = {}) {
  return Instance{i.ring()->spec(), gens_of(i), std::move(phi),
                  std::move(claim), std::move(elements), std::move(w)};
}

class Tally {
 public:
  Tally(std::string theorem, const RingHandle& r) {
    v_.theorem = std::move(theorem);
    v_.ring = r->spec();
  }

  void check() { ++v_.checked; }
  void skip() { ++v_.skipped; }
  void failure(Instance c) {
    ++failures_;
    if (!v_.counterexample) v_.counterexample = std::move(c);
  }
  void note(std::string s) { v_.notes.push_back(std::move(s)); }
  void evidence(Instance c) {
    if (!v_.evidence) v_.evidence = std::move(c);
  }
  TheoremVerdict& verdict() { return v_; }

  TheoremVerdict finish() {
    if (failures_) {
      v_.status = VerdictStatus::Fail;
      v_.notes.push_back("failures=" + std::to_string(failures_));
    } else {
      v_.status = v_.checked ? VerdictStatus::Pass : VerdictStatus::NotApplicable;
    }
    return std::move(v_);
  }

 private:
  TheoremVerdict v_;
  std::uint64_t failures_ = 0;
};

class Workspace {
 public:
  Workspace(RingHandle r, const SuiteOptions& options)
      : ring_(std::move(r)), options_(options) {}

  const RingHandle& ring() const { return ring_; }
  const SuiteOptions& options() const { return options_; }
  const std::vector<PhiDescriptor>& phis() const { return options_.phis; }

  const IdealLattice& lattice() {
    if (!lattice_) lattice_.emplace(ring_);
    return *lattice_;
  }

  PhiValue eval(const PhiDescriptor& phi, const Ideal& i) const {
    return options_.evaluator(phi, i);
  }

  Check one_abs(const Ideal& i, const PhiDescriptor& phi) const {
    return is_phi_one_absorbing_prime(i, eval(phi, i));
  }

 private:
  RingHandle ring_;
  const SuiteOptions& options_;
  std::optional<IdealLattice> lattice_;
};

// Witness of whichever side of a failed biconditional is false.
std::optional<Witness> false_side(const Check& a, const Check& b) {
  if (!a.holds) return a.witness;
  return b.witness;
}

bool value_subset(const PhiValue& a, const PhiValue& b) {
  if (a.is_empty_marker()) return true;
  if (b.is_empty_marker()) return false;
  return std::all_of(a.elements().begin(), a.elements().end(),
                     [&](ElementId x) { return b.contains(x); });
}

bool equals_some(const std::vector<ElementId>& set,
                 const std::vector<Ideal>& ideals) {
  return std::any_of(ideals.begin(), ideals.end(), [&](const Ideal& m) {
    return m.size() == set.size() &&
           std::all_of(set.begin(), set.end(),
                       [&](ElementId x) { return m.contains(x); });
  });
}

// --- implication lattice ------------------------------------------------

TheoremVerdict run_pfirst(Workspace& ws) {
  Tally t("pfirst", ws.ring());
  const auto& lattice = ws.lattice();
  const auto& phis = ws.phis();

  std::vector<std::pair<std::size_t, std::size_t>> leq;
  for (std::size_t a = 0; a < phis.size(); ++a)
    for (std::size_t b = 0; b < phis.size(); ++b) {
      if (a == b) continue;
      const bool below = std::all_of(
          lattice.proper().begin(), lattice.proper().end(),
          [&](const Ideal& i) {
            return value_subset(ws.eval(phis[a], i), ws.eval(phis[b], i));
          });
      if (below) leq.emplace_back(a, b);
    }

  auto implies = [&](const Ideal& i, const Check& lhs, const Check& rhs,
                     const std::string& phi, const std::string& claim) {
    t.check();
    if (lhs.holds && !rhs.holds) t.failure(instance(i, phi, claim, rhs.witness));
  };

  for (const auto& i : lattice.proper()) {
    std::vector<Check> one, prime;
    for (const auto& phi : phis) {
      const auto v = ws.eval(phi, i);
      one.push_back(is_phi_one_absorbing_prime(i, v));
      prime.push_back(is_phi_prime(i, v));
    }
    for (auto [a, b] : leq)
      implies(i, one[a], one[b], phis[b].to_string(),
              "monotone: " + phis[a].to_string() + " <= " + phis[b].to_string());
    for (std::size_t k = 0; k < phis.size(); ++k)
      implies(i, prime[k], one[k], phis[k].to_string(),
              "phi-prime implies phi-1-absorbing");

    const auto empty = ws.one_abs(i, PhiDescriptor::empty());
    const auto weakly = ws.one_abs(i, PhiDescriptor::zero());
    const auto w = ws.one_abs(i, PhiDescriptor::omega());
    const unsigned stab = stabilization_index(i);
    std::map<unsigned, Check> n_almost;
    for (unsigned m = 2; m <= std::max(3u, stab); ++m)
      n_almost.emplace(m, ws.one_abs(i, PhiDescriptor::power(m)));
    const auto& almost = n_almost.at(2);

    implies(i, empty, weakly, "zero", "1-absorbing implies weakly");
    implies(i, weakly, w, "omega", "weakly implies w");
    for (const auto& [m, c] : n_almost) {
      implies(i, w, c, "pow:" + std::to_string(m), "w implies n-almost");
      implies(i, c, almost, "pow:2", "n-almost implies almost");
    }

    // n-almost for every m up to the stabilization index ⟺ w.
    t.check();
    const Check* failing = nullptr;
    unsigned failing_m = 0;
    for (unsigned m = 2; m <= std::max(2u, stab); ++m)
      if (!n_almost.at(m).holds) {
        failing = &n_almost.at(m);
        failing_m = m;
        break;
      }
    const bool all_n = failing == nullptr;
    if (all_n != w.holds) {
      if (!w.holds)
        t.failure(instance(i, "omega", "all n-almost implies w", w.witness));
      else
        t.failure(instance(i, "pow:" + std::to_string(failing_m),
                           "w implies all n-almost", failing->witness));
    }

    const auto prime0 = is_prime(i);
    implies(i, prime0, empty, "empty", "prime implies 1-absorbing");
    if (!i.is_zero()) {
      const auto two = is_two_absorbing(i);
      t.check();
      if (empty.holds && !two.holds)
        t.failure(instance(i, "empty", "1-absorbing implies 2-absorbing",
                           two.witness));
    }
  }
  return t.finish();
}

// --- characterizations --------------------------------------------------

TheoremVerdict run_tmm(Workspace& ws) {
  Tally t("tmm", ws.ring());
  const auto& lattice = ws.lattice();
  std::uint64_t too_large = 0;
  for (const auto& i : lattice.proper())
    for (const auto& phi : ws.phis()) {
      const auto v = ws.eval(phi, i);
      const auto def = is_phi_one_absorbing_prime(i, v);
      for (int variant = 2; variant <= 6; ++variant) {
        bool got;
        try {
          got = tmm_check(i, v, variant, &lattice);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::TooLarge) throw;
          ++too_large;
          t.skip();
          continue;
        }
        t.check();
        if (got != def.holds)
          t.failure(instance(i, phi.to_string(),
                             "variant " + std::to_string(variant) +
                                 " disagrees with the definition",
                             def.witness));
      }
    }
  if (too_large) t.note("lattice too large for some variants: " +
                        std::to_string(too_large));
  return t.finish();
}

// --- triple-zero consequences -------------------------------------------

void run_i3_instance(const Workspace& ws, const Ideal& i,
                     const PhiDescriptor& phi, Tally& t) {
  const auto v = ws.eval(phi, i);
  if (v.is_empty_marker() || !is_phi_one_absorbing_prime(i, v).holds ||
      is_one_absorbing_prime(i).holds) {
    t.skip();
    return;
  }
  const auto zeros = all_triple_zeros(i, v);
  if (zeros.empty()) {
    t.skip();
    return;
  }
  const auto& r = *i.ring();
  const auto i2 = ideal_power(i, 2);
  const auto i3 = ideal_power(i, 3);

  // First e in `set` with f·e ∉ φ(I).
  auto escape = [&](ElementId f, const Ideal& set) -> std::optional<ElementId> {
    for (auto e : set.elements())
      if (!v.contains(r.mul_fast(f, e))) return e;
    return std::nullopt;
  };

  for (const auto& [x, y, z] : zeros) {
    t.check();
    std::vector<std::pair<std::string, std::pair<ElementId, const Ideal*>>>
        claims{{"xyI", {r.mul_fast(x, y), &i}}};
    if (!i.contains(r.mul_fast(x, z)) && !i.contains(r.mul_fast(y, z))) {
      claims.push_back({"xzI", {r.mul_fast(x, z), &i}});
      claims.push_back({"yzI", {r.mul_fast(y, z), &i}});
      claims.push_back({"xI2", {x, &i2}});
      claims.push_back({"yI2", {y, &i2}});
      claims.push_back({"zI2", {z, &i2}});
      claims.push_back({"I3", {r.one(), &i3}});
    }
    for (const auto& [claim, target] : claims) {
      if (auto e = escape(target.first, *target.second)) {
        t.failure(instance(i, phi.to_string(), claim, std::nullopt,
                           {x, y, z, *e}));
        return;
      }
    }
  }
}

// --- principal ideals ---------------------------------------------------

std::vector<PhiDescriptor> principal_phis() {
  return {PhiDescriptor::empty(), PhiDescriptor::zero(),
          PhiDescriptor::power(2), PhiDescriptor::power(3),
          PhiDescriptor::omega()};
}

void run_principal_instance(const Workspace& ws, ElementId a, Tally& t) {
  const auto& r = ws.ring();
  if (r->is_unit(a)) {
    t.skip();
    return;
  }
  const auto ideal = principal(r, a);
  if (!annihilator(r, a).subset_of(ideal)) {
    t.skip();
    return;
  }
  const auto base = ws.one_abs(ideal, PhiDescriptor::empty());
  for (const auto& phi : principal_phis()) {
    t.check();
    const auto c = ws.one_abs(ideal, phi);
    if (c.holds != base.holds) {
      const bool phi_side = !c.holds;
      t.failure(instance(ideal, phi_side ? phi.to_string() : "empty",
                         "phi-1-absorbing iff 1-absorbing",
                         phi_side ? c.witness : base.witness));
    }
  }
}

// --- φ-prime equivalence on non-quasi-local rings -----------------------

TheoremVerdict run_tp1abs(Workspace& ws) {
  Tally t("tp1-abs", ws.ring());
  const auto& lattice = ws.lattice();
  if (lattice.is_quasi_local()) {
    t.note("quasi-local ring");
    return t.finish();
  }
  const auto& r = *ws.ring();
  const auto n = static_cast<ElementId>(r.order());
  for (const auto& i : lattice.proper())
    for (const auto& phi : ws.phis()) {
      const auto v = ws.eval(phi, i);
      bool hypothesis = true;
      if (!v.is_empty_marker()) {
        for (auto x : i.elements()) {
          std::vector<ElementId> col;
          for (ElementId s = 0; s < n; ++s)
            if (v.contains(r.mul_fast(s, x))) col.push_back(s);
          if (equals_some(col, lattice.maximal())) {
            hypothesis = false;
            break;
          }
        }
      }
      if (!hypothesis) {
        t.skip();
        continue;
      }
      t.check();
      const auto p = is_phi_prime(i, v);
      const auto o = is_phi_one_absorbing_prime(i, v);
      if (p.holds != o.holds)
        t.failure(instance(i, phi.to_string(), "phi-prime iff phi-1-absorbing",
                           false_side(p, o)));
    }
  return t.finish();
}

// --- quotient transfer --------------------------------------------------

TheoremVerdict run_tfac(Workspace& ws) {
  Tally t("tfac", ws.ring());
  const auto& lattice = ws.lattice();
  const auto& r = ws.ring();
  std::map<std::size_t, RingHandle> quotients;
  auto quotient_by = [&](const Ideal& j) -> RingHandle {
    const auto idx = lattice.index_of(j);
    if (!idx) return make_quotient(j);
    auto it = quotients.find(*idx);
    if (it == quotients.end()) it = quotients.emplace(*idx, make_quotient(j)).first;
    return it->second;
  };
  std::uint64_t part[3] = {0, 0, 0}, broken[3] = {0, 0, 0};

  for (const auto& i : lattice.proper())
    for (const auto& phi : ws.phis()) {
      const auto v = ws.eval(phi, i);
      const auto a = is_phi_one_absorbing_prime(i, v);

      if (v.is_empty_marker() || !v.ideal()) {
        t.skip();
      } else {
        const auto q = quotient_by(*v.ideal());
        const auto img = image(i, q);
        const auto weak = is_weakly_one_absorbing(img);
        if (a.holds) {
          t.check();
          ++part[0];
          if (!weak.holds) {
            ++broken[0];
            t.failure(instance(img, "zero", "(i) image weakly 1-absorbing",
                               weak.witness));
          }
        } else {
          t.skip();
        }
        std::vector<ElementId> lifted;
        for (auto u : r->units()) lifted.push_back(q->project(u));
        std::sort(lifted.begin(), lifted.end());
        lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
        if (weak.holds && lifted == q->units()) {
          t.check();
          ++part[1];
          if (!a.holds) {
            ++broken[1];
            t.failure(instance(i, phi.to_string(), "(ii) converse", a.witness));
          }
        } else {
          t.skip();
        }
      }

      if (!a.holds) {
        t.skip();
        continue;
      }
      for (const auto& j : lattice.proper()) {
        if (!j.subset_of(i)) continue;
        t.check();
        ++part[2];
        const auto q = quotient_by(j);
        const auto img = image(i, q);
        const auto phi_j = PhiDescriptor::quotient(phi, j);
        const auto c = is_phi_one_absorbing_prime(img, ws.eval(phi_j, img));
        if (!c.holds) {
          ++broken[2];
          t.failure(instance(img, phi_j.to_string(),
                             "(iii) I/J phi_J-1-absorbing", c.witness));
        }
      }
    }
  for (int k = 0; k < 3; ++k)
    t.note("part " + std::string(k + 1, 'i') + ": checked=" +
           std::to_string(part[k]) + " failures=" + std::to_string(broken[k]));
  return t.finish();
}

// --- localization transfer ----------------------------------------------

void run_loc_instance(Workspace& ws, const MultSet& s, Tally& t) {
  const auto& lattice = ws.lattice();
  const auto loc = make_localization(s);
  for (const auto& i : lattice.proper())
    for (const auto& phi : ws.phis()) {
      const bool meets = std::any_of(s.closure().begin(), s.closure().end(),
                                     [&](ElementId x) { return i.contains(x); });
      if (meets) {
        t.skip();
        continue;
      }
      const auto v = ws.eval(phi, i);
      if (!is_phi_one_absorbing_prime(i, v).holds) {
        t.skip();
        continue;
      }
      const auto ext = image(i, loc);
      const auto phi_s = PhiDescriptor::localized(phi, s);
      const auto vs = ws.eval(phi_s, ext);
      std::vector<ElementId> ext_phi;
      if (!v.is_empty_marker()) {
        for (auto x : v.elements()) ext_phi.push_back(loc->project(x));
        std::sort(ext_phi.begin(), ext_phi.end());
        ext_phi.erase(std::unique(ext_phi.begin(), ext_phi.end()),
                      ext_phi.end());
        const bool inside =
            !vs.is_empty_marker() &&
            std::all_of(ext_phi.begin(), ext_phi.end(),
                        [&](ElementId x) { return vs.contains(x); });
        if (!inside) {
          t.skip();
          continue;
        }
      }
      t.check();
      const auto c = is_phi_one_absorbing_prime(ext, vs);
      if (!c.holds) {
        t.failure(instance(ext, phi_s.to_string(),
                           "extension phi_S-1-absorbing", c.witness));
        continue;
      }
      const bool differs = v.is_empty_marker() || ext_phi.size() != ext.size();
      if (!differs) continue;
      const auto contraction = preimage(ext);
      if (contraction != i) {
        ElementId extra = 0;
        for (auto x : contraction.elements())
          if (!i.contains(x)) {
            extra = x;
            break;
          }
        t.failure(instance(i, phi.to_string(), "contraction equals I",
                           std::nullopt, {extra}));
      }
    }
}

std::vector<MultSet> corpus_mult_sets(Workspace& ws) {
  const auto& r = ws.ring();
  std::vector<MultSet> out;
  auto add = [&](MultSet s) {
    if (std::find(out.begin(), out.end(), s) == out.end())
      out.push_back(std::move(s));
  };
  for (ElementId a = 0; a < r->order(); ++a) {
    try {
      add(MultSet(r, {a}));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ZeroRing) throw;
    }
  }
  for (const auto& p : ws.lattice().proper()) {
    if (!is_prime(p).holds) continue;
    std::vector<ElementId> complement;
    for (ElementId x = 0; x < r->order(); ++x)
      if (!p.contains(x)) complement.push_back(x);
    add(MultSet(r, std::move(complement)));
  }
  return out;
}

// --- every ideal almost 1-absorbing -------------------------------------

TheoremVerdict run_tmain(Workspace& ws) {
  Tally t("tmain", ws.ring());
  const auto& lattice = ws.lattice();
  bool lhs = true;
  for (const auto& i : lattice.proper()) {
    const auto c = ws.one_abs(i, PhiDescriptor::power(2));
    if (!c.holds) {
      lhs = false;
      t.evidence(instance(i, "pow:2", "not almost 1-absorbing", c.witness));
      break;
    }
  }
  const bool quasi_local = lattice.is_quasi_local();
  const bool cube_zero =
      quasi_local && ideal_power(lattice.maximal().front(), 3).is_zero();
  const bool regular = lattice.is_von_neumann_regular();
  const bool rhs = (quasi_local && cube_zero) || regular;
  t.check();
  t.note(std::string("lhs=") + (lhs ? "true" : "false") +
         " rhs=" + (rhs ? "true" : "false") +
         " quasi_local=" + (quasi_local ? "true" : "false") +
         " m3_zero=" + (cube_zero ? "true" : "false") +
         " von_neumann_regular=" + (regular ? "true" : "false"));
  if (lhs != rhs) {
    if (t.verdict().evidence)
      t.failure(*t.verdict().evidence);
    else
      t.failure(instance(zero_ideal(ws.ring()), "pow:2",
                         "every proper ideal almost 1-absorbing, rhs false"));
  }
  return t.finish();
}

// --- remarks ------------------------------------------------------------

// ∃ z ∉ I and nonunit y with (φ(I):yz) ⊄ (I:y), i.e. some x has
// xyz ∈ φ(I) and xy ∉ I. `nonunit` restricts x and z to nonunits.
std::optional<std::array<ElementId, 3>> colon_escape(const Ideal& i,
                                                     const PhiValue& v,
                                                     bool nonunit) {
  if (v.is_empty_marker()) return std::nullopt;
  const auto& r = *i.ring();
  const auto n = static_cast<ElementId>(r.order());
  const auto nu = r.nonunits();
  for (ElementId z = 0; z < n; ++z) {
    if (i.contains(z) || (nonunit && r.is_unit_fast(z))) continue;
    for (auto y : nu)
      for (ElementId x = 0; x < n; ++x) {
        if (nonunit && r.is_unit_fast(x)) continue;
        const auto xy = r.mul_fast(x, y);
        if (!i.contains(xy) && v.contains(r.mul_fast(xy, z)))
          return std::array<ElementId, 3>{x, y, z};
      }
  }
  return std::nullopt;
}

std::vector<TheoremVerdict> run_remarks(Workspace& ws) {
  Tally triple("remark-triple-zero", ws.ring());
  Tally absorbing("remark-one-absorbing", ws.ring());
  const char* reading_name[2] = {"literal", "nonunit"};
  std::uint64_t mismatch[2][2] = {{0, 0}, {0, 0}};
  for (const auto& i : ws.lattice().proper()) {
    const bool one = is_one_absorbing_prime(i).holds;
    for (const auto& phi : ws.phis()) {
      const auto v = ws.eval(phi, i);
      const auto a = is_phi_one_absorbing_prime(i, v);
      const bool has_zero =
          a.holds && search_triple_zero_unchecked(i, v).has_value();
      if (a.holds) triple.check();
      absorbing.check();
      for (int reading = 0; reading < 2; ++reading) {
        const auto esc = colon_escape(i, v, reading == 1);
        auto mismatch_at = [&](Tally& t, int which) {
          ++mismatch[which][reading];
          std::vector<ElementId> el;
          if (esc) el.assign(esc->begin(), esc->end());
          t.evidence(instance(i, phi.to_string(),
                              std::string(reading_name[reading]) + " reading",
                              std::nullopt, el));
        };
        if (a.holds && has_zero != esc.has_value()) mismatch_at(triple, 0);
        if (one != (a.holds && !esc.has_value())) mismatch_at(absorbing, 1);
      }
    }
  }
  for (int reading = 0; reading < 2; ++reading) {
    triple.note(std::string(reading_name[reading]) +
                " mismatches=" + std::to_string(mismatch[0][reading]));
    absorbing.note(std::string(reading_name[reading]) +
                   " mismatches=" + std::to_string(mismatch[1][reading]));
  }
  std::vector<TheoremVerdict> out;
  for (auto* t : {&triple, &absorbing}) {
    auto v = t->finish();
    v.status = VerdictStatus::Info;
    out.push_back(std::move(v));
  }
  return out;
}

// --- products -----------------------------------------------------------

bool is_unique_maximal(const IdealLattice& lattice, const PhiValue& v) {
  if (v.is_empty_marker() || !lattice.is_quasi_local()) return false;
  return v.equals(lattice.maximal().front());
}

}  // namespace

// --- public entry points ------------------------------------------------

TheoremVerdict verify_triple_zero_consequences(const RingHandle& r,
                                               const Ideal& i,
                                               const PhiDescriptor& phi,
                                               const SuiteOptions& options) {
  if (i.ring() != r) fail(ErrorKind::WrongRing, "ideal of another ring");
  Workspace ws(r, options);
  Tally t("I3", r);
  run_i3_instance(ws, i, phi, t);
  return t.finish();
}

TheoremVerdict verify_triple_zero_consequences(const RingHandle& r,
                                               const SuiteOptions& options) {
  Workspace ws(r, options);
  Tally t("I3", r);
  for (const auto& i : ws.lattice().proper())
    for (const auto& phi : ws.phis()) run_i3_instance(ws, i, phi, t);
  return t.finish();
}

TheoremVerdict verify_principal(const RingHandle& r, ElementId a,
                                const SuiteOptions& options) {
  r->check_element(a);
  Workspace ws(r, options);
  Tally t("principal", r);
  run_principal_instance(ws, a, t);
  return t.finish();
}

TheoremVerdict verify_principal(const RingHandle& r,
                                const SuiteOptions& options) {
  Workspace ws(r, options);
  Tally t("principal", r);
  for (ElementId a = 0; a < r->order(); ++a) run_principal_instance(ws, a, t);
  return t.finish();
}

TheoremVerdict verify_implication_lattice(const RingHandle& r,
                                          const SuiteOptions& options) {
  Workspace ws(r, options);
  return run_pfirst(ws);
}

TheoremVerdict verify_characterizations(const RingHandle& r,
                                        const SuiteOptions& options) {
  Workspace ws(r, options);
  return run_tmm(ws);
}

TheoremVerdict verify_phi_prime_equivalence(const RingHandle& r,
                                            const SuiteOptions& options) {
  Workspace ws(r, options);
  return run_tp1abs(ws);
}

TheoremVerdict verify_quotient_transfer(const RingHandle& r,
                                        const SuiteOptions& options) {
  Workspace ws(r, options);
  return run_tfac(ws);
}

TheoremVerdict verify_localization_transfer(const RingHandle& r,
                                            const MultSet& s,
                                            const SuiteOptions& options) {
  if (s.ring() != r) fail(ErrorKind::WrongRing, "multiplicative set of another ring");
  Workspace ws(r, options);
  Tally t("loc", r);
  run_loc_instance(ws, s, t);
  return t.finish();
}

TheoremVerdict verify_localization_transfer(const RingHandle& r,
                                            const SuiteOptions& options) {
  Workspace ws(r, options);
  Tally t("loc", r);
  const auto sets = corpus_mult_sets(ws);
  for (const auto& s : sets) run_loc_instance(ws, s, t);
  t.note("multiplicative sets=" + std::to_string(sets.size()));
  return t.finish();
}

TheoremVerdict verify_every_ideal_almost(const RingHandle& r,
                                         const SuiteOptions& options) {
  Workspace ws(r, options);
  return run_tmain(ws);
}

std::vector<TheoremVerdict> check_remarks(const RingHandle& r,
                                          const SuiteOptions& options) {
  Workspace ws(r, options);
  return run_remarks(ws);
}

std::vector<TheoremVerdict> verify_product_theorems(
    const std::vector<RingHandle>& factors,
    const std::vector<PhiDescriptor>& phis, const SuiteOptions& options) {
  const std::size_t n = factors.size();
  if (n < 2 || n > 3)
    fail(ErrorKind::InvalidInput, "product theorems take 2 or 3 factors");
  if (phis.empty()) fail(ErrorKind::InvalidInput, "no φ choices given");
  const auto r = make_product(factors);
  Workspace ws(r, options);
  std::vector<IdealLattice> parts;
  for (const auto& f : factors) parts.emplace_back(f);

  Tally tm1("tm1", r), tnloc("tnloc", r), tgen("tgen", r);

  std::vector<std::size_t> idx(n, 0), choice(n, 0);
  auto advance = [](std::vector<std::size_t>& v, auto limit) {
    for (std::size_t k = v.size(); k-- > 0;) {
      if (++v[k] < limit(k)) return true;
      v[k] = 0;
    }
    return false;
  };
  do {
    std::vector<Ideal> comps;
    bool all_whole = true;
    for (std::size_t k = 0; k < n; ++k) {
      comps.push_back(parts[k].ideals()[idx[k]]);
      all_whole &= comps.back().is_whole();
    }
    if (all_whole) continue;
    const auto i = product_ideal(r, comps);
    std::fill(choice.begin(), choice.end(), 0);
    do {
      std::vector<PhiDescriptor> chosen;
      for (auto c : choice) chosen.push_back(phis[c]);
      const auto phi = PhiDescriptor::product(chosen);
      const auto v = ws.eval(phi, i);
      const auto a = is_phi_one_absorbing_prime(i, v);
      std::vector<PhiValue> comp_values;
      for (std::size_t k = 0; k < n; ++k)
        comp_values.push_back(eval_phi_any(chosen[k], comps[k]));
      const bool phi_is_i = v.equals(i);

      if (n == 2) {
        if (!a.holds) {
          tm1.skip();
        } else {
          tm1.check();
          auto side = [&](std::size_t p, std::size_t q) {
            if (!comps[q].is_whole()) return false;
            if (!is_phi_prime(comps[p], comp_values[p]).holds) return false;
            const auto at_whole =
                eval_phi_any(chosen[q], whole_ring(factors[q]));
            return is_unique_maximal(parts[q], at_whole) ||
                   is_prime(comps[p]).holds;
          };
          if (!(phi_is_i || side(0, 1) || side(1, 0)))
            tm1.failure(instance(i, phi.to_string(), "trichotomy"));
        }
      }

      bool hypothesis = !i.is_zero() && !phi_is_i;
      for (std::size_t k = 0; k < n && hypothesis; ++k)
        hypothesis = !is_unique_maximal(parts[k], comp_values[k]);
      std::vector<Tally*> targets{&tgen};
      if (n == 2) targets.push_back(&tnloc);
      for (auto* t : targets) {
        if (!hypothesis) {
          t->skip();
          continue;
        }
        t->check();
        std::size_t proper = 0, at = 0;
        for (std::size_t k = 0; k < n; ++k)
          if (!comps[k].is_whole()) ++proper, at = k;
        const bool s2 = proper == 1 && is_prime(comps[at]).holds;
        const auto s3 = is_prime(i);
        const auto s4 = is_weakly_prime(i);
        const auto s5 = is_one_absorbing_prime(i);
        const bool agree = a.holds == s2 && s2 == s3.holds &&
                           s3.holds == s4.holds && s4.holds == s5.holds;
        if (agree) continue;
        if (!a.holds)
          t->failure(instance(i, phi.to_string(), "(i)-(v) agree", a.witness));
        else if (!s3.holds)
          t->failure(instance(i, "empty", "(i)-(v) agree", s3.witness));
        else if (!s4.holds)
          t->failure(instance(i, "zero", "(i)-(v) agree", s4.witness));
        else if (!s5.holds)
          t->failure(instance(i, "empty", "(i)-(v) agree", s5.witness));
        else
          t->failure(instance(i, phi.to_string(), "(i)-(v) agree"));
      }
    } while (advance(choice, [&](std::size_t) { return phis.size(); }));
  } while (advance(idx, [&](std::size_t k) { return parts[k].ideals().size(); }));

  std::vector<TheoremVerdict> out;
  if (n == 2) {
    out.push_back(tm1.finish());
    out.push_back(tnloc.finish());
  }
  out.push_back(tgen.finish());
  return out;
}

}  // namespace absorb
