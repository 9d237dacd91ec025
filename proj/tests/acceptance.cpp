// Acceptance criteria, one PASS/FAIL line each.
//
// Exit status is 0 when every criterion passes or fails only in the
// documented way listed under kKnownFailures; any other failure, and any
// known failure that stops reproducing exactly, exits 1.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "absorb/classify.hpp"
#include "absorb/theorems.hpp"
#include "absorb/zn_fast.hpp"
#include "support.hpp"

using namespace absorb;

namespace {

constexpr double kGoldenLimit = 1.0;
constexpr double kLatticeLimit = 300.0;
constexpr double kCharacterizationLimit = 600.0;
constexpr double kAlmostLimit = 120.0;
constexpr double kFastPathLimit = 120.0;
constexpr std::uint64_t kFastPathMaxN = 200;

// Criterion 10 cannot hold: the quotient converse is false. In Z24 with
// I = (4) and φ = pow:2, φ(I) = (8), R/φ(I) ≅ Z8, (4)/(8) is weakly
// 1-absorbing and every unit of Z8 lifts, but x = 2, y = 3, z = 2 are
// nonunits of Z24 with xyz = 12 ∈ I − I², xy = 6 ∉ I, z ∉ I. The converse
// silently treats 3 as a unit because its image in Z8 is one. Every such
// failure must be of this exact shape for the run to count as expected.
const std::set<int> kKnownFailures{10};

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit;
  std::function<Outcome()> run;
};

std::string join(const std::vector<ElementId>& xs) {
  std::string out = "(";
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + std::to_string(xs[k]);
  return out + ")";
}

std::vector<TheoremVerdict> corpus(std::vector<std::string> theorems,
                                   const SuiteOptions& suite = {}) {
  CorpusOptions o;
  o.theorems = std::move(theorems);
  o.suite = suite;
  return run_corpus(default_corpus_specs(), o);
}

struct Count {
  std::uint64_t checked = 0, skipped = 0, pass = 0, fail = 0, na = 0, error = 0;
};

Count count(const std::vector<TheoremVerdict>& vs) {
  Count c;
  for (const auto& v : vs) {
    c.checked += v.checked;
    c.skipped += v.skipped;
    switch (v.status) {
      case VerdictStatus::Pass: ++c.pass; break;
      case VerdictStatus::Fail: ++c.fail; break;
      case VerdictStatus::NotApplicable: ++c.na; break;
      case VerdictStatus::Error: ++c.error; break;
      case VerdictStatus::Info: break;
    }
  }
  return c;
}

std::string describe(const Count& c) {
  std::ostringstream os;
  os << "checked=" << c.checked << " skipped=" << c.skipped << " pass=" << c.pass
     << " fail=" << c.fail << " n/a=" << c.na << " error=" << c.error;
  return os.str();
}

bool has_note(const TheoremVerdict& v, const std::string& text) {
  for (const auto& n : v.notes)
    if (n.find(text) != std::string::npos) return true;
  return false;
}

Outcome ex1() {
  const auto z18 = make_zn(18);
  const auto zero = zero_ideal(z18);
  const bool weakly = is_weakly_one_absorbing(zero).holds;
  const auto one = is_one_absorbing_prime(zero);
  const auto w = one.witness ? one.witness->elements : std::vector<ElementId>{};
  const bool ok = weakly && !one.holds && w == std::vector<ElementId>{2, 3, 3} &&
                  replay(zero, PhiValue::empty_marker(z18), *one.witness);
  return {ok, "weakly=" + std::string(weakly ? "true" : "false") +
                  " one_absorbing=" + (one.holds ? "true" : "false") + " witness=" + join(w)};
}

Outcome ex3() {
  const auto z18 = make_zn(18);
  const auto i = principal(z18, 9);
  const bool abs = is_phi_one_absorbing_prime(i, PhiDescriptor::zero()).holds;
  const auto p = is_phi_prime(i, PhiDescriptor::zero());
  const auto w = p.witness ? p.witness->elements : std::vector<ElementId>{};
  const bool ok = abs && !p.holds && w == std::vector<ElementId>{3, 3};
  return {ok, "phi_one_absorbing=" + std::string(abs ? "true" : "false") +
                  " phi_prime=" + (p.holds ? "true" : "false") + " witness=" + join(w)};
}

Outcome z2_4() {
  const auto r = parse_ring_spec("prod(Zn:2,Zn:2,Zn:2,Zn:2)");
  const auto i = principal(r, 8);  // Z2×0×0×0
  const bool w_abs = is_w_one_absorbing(i).holds;
  const auto weak = is_weakly_one_absorbing(i);
  const auto got = weak.witness ? weak.witness->elements : std::vector<ElementId>{};

  // Least violation under the documented order, from the independent model.
  const oracle::Ring m({2, 2, 2, 2});
  oracle::Set s(16, false);
  s[0] = s[8] = true;
  oracle::Set zero(16, false);
  zero[0] = true;
  const auto expect = oracle::one_absorbing_witness(m, s, zero);
  const bool least = expect && got == std::vector<ElementId>(expect->begin(), expect->end());

  const auto phi = eval_phi(PhiDescriptor::zero(), i);
  const Witness listed{WitnessKind::OneAbsorbing, {14, 13, 11}};  // (1,1,1,0),(1,1,0,1),(1,0,1,1)
  const bool listed_ok = replay(i, phi, listed);
  const bool ok = w_abs && !weak.holds && least && replay(i, phi, *weak.witness) && listed_ok;
  return {ok, "w_one_absorbing=" + std::string(w_abs ? "true" : "false") +
                  " weakly=" + (weak.holds ? "true" : "false") + " least_witness=" + join(got) +
                  " listed_triple_replays=" + (listed_ok ? "true" : "false")};
}

Outcome z4() {
  const auto zero = zero_ideal(make_zn(4));
  const bool one = is_one_absorbing_prime(zero).holds;
  const bool prime = is_prime(zero).holds;
  return {one && !prime, "one_absorbing=" + std::string(one ? "true" : "false") +
                             " prime=" + (prime ? "true" : "false")};
}

Outcome all_pass(const std::string& theorem) {
  const auto c = count(corpus({theorem}));
  return {c.fail == 0 && c.error == 0 && c.checked > 0, describe(c)};
}

Outcome triple_zero() {
  const auto c = count(corpus({"I3"}));

  const auto mutated = support::triple_product_mutation();
  const auto mv = corpus({"I3"}, mutated);
  std::uint64_t caught = 0, replayed = 0;
  for (const auto& v : mv)
    if (v.status == VerdictStatus::Fail) {
      ++caught;
      if (v.counterexample && replay_counterexample(*v.counterexample, mutated)) ++replayed;
    }
  const bool ok = c.fail == 0 && c.error == 0 && c.checked > 0 && caught >= 1 &&
                  replayed == caught;
  return {ok, describe(c) + " mutation_fail_verdicts=" + std::to_string(caught) +
                  " replayed=" + std::to_string(replayed)};
}

Outcome almost_everywhere() {
  const auto vs = corpus({"tmain"});
  const auto c = count(vs);
  bool named = true;
  for (const auto& [spec, sides] : std::map<std::string, std::string>{
           {"Zn:8", "lhs=true rhs=true"},
           {"Zn:6", "lhs=true rhs=true"},
           {"Zn:12", "lhs=false rhs=false"}}) {
    bool found = false;
    for (const auto& v : vs)
      if (v.ring == spec) {
        found = v.status == VerdictStatus::Pass && has_note(v, sides);
        if (spec == "Zn:12")
          found = found && v.evidence && replay_counterexample(*v.evidence);
      }
    named = named && found;
  }
  return {c.fail == 0 && c.error == 0 && c.pass == vs.size() && named,
          describe(c) + " Z8/Z6/Z12 as expected=" + (named ? "true" : "false")};
}

Outcome fast_path() {
  const std::vector<PhiDescriptor> phis{PhiDescriptor::empty(), PhiDescriptor::zero(),
                                        PhiDescriptor::power(2), PhiDescriptor::power(3),
                                        PhiDescriptor::omega()};
  std::uint64_t cells = 0, mismatches = 0;
  std::string first;
  for (std::uint64_t n = 2; n <= kFastPathMaxN; ++n) {
    const auto r = make_zn(n);
    for (auto d : divisors(n)) {
      if (d == 1) continue;  // (1) is not proper
      const auto i = principal(r, static_cast<ElementId>(d % n));
      for (const auto& phi : phis) {
        ++cells;
        const bool fast = zn_fast_classify(n, d, phi).holds;
        const bool slow = is_phi_one_absorbing_prime(i, phi).holds;
        if (fast != slow) {
          ++mismatches;
          if (first.empty())
            first = " first=(" + std::to_string(n) + "," + std::to_string(d) + "," +
                    phi.to_string() + ")";
        }
      }
    }
  }
  return {mismatches == 0, "cells=" + std::to_string(cells) +
                               " mismatches=" + std::to_string(mismatches) + first};
}

Outcome transfer() {
  const std::vector<std::string> ids{"tfac", "loc", "tm1", "tnloc", "tgen"};
  const auto vs = corpus(ids);
  std::map<std::string, Count> per;
  for (const auto& v : vs) {
    auto& c = per[v.theorem];
    const auto one = count({v});
    c.checked += one.checked;
    c.skipped += one.skipped;
    c.pass += one.pass;
    c.fail += one.fail;
    c.na += one.na;
    c.error += one.error;
  }
  bool ok = true;
  std::string detail, failing;
  for (const auto& v : vs)
    if (v.status == VerdictStatus::Fail && v.counterexample) {
      const auto& c = *v.counterexample;
      failing += (failing.empty() ? "" : ", ") + v.theorem + " " + c.ring + " " +
                 c.claim + " I=" + join(c.ideal_generators) + " phi=" + c.phi +
                 (c.witness ? " witness=" + join(c.witness->elements) : "");
    }
  for (const auto& id : ids) {
    const auto& c = per[id];
    ok = ok && c.fail == 0 && c.error == 0 && c.checked > 0;
    detail += (detail.empty() ? "" : "; ") + id + ": " + describe(c);
  }
  if (!failing.empty()) detail += "; failing: " + failing;
  return {ok, detail};
}

// The documented shape of the criterion 10 failure: only tfac fails, only
// in part ii, with a replayable counterexample; everything else is clean.
bool transfer_failure_is_known() {
  const auto vs = corpus({"tfac", "loc", "tm1", "tnloc", "tgen"});
  std::map<std::string, std::uint64_t> checked;
  bool any = false;
  for (const auto& v : vs) {
    checked[v.theorem] += v.checked;
    if (v.status == VerdictStatus::Error) return false;
    if (v.status != VerdictStatus::Fail) continue;
    any = true;
    if (v.theorem != "tfac" || !v.counterexample) return false;
    if (v.counterexample->claim != "(ii) converse") return false;
    if (!replay_counterexample(*v.counterexample)) return false;
    bool clean_i = false, clean_iii = false;
    for (const auto& n : v.notes) {
      if (n.rfind("part i:", 0) == 0) clean_i = n.find("failures=0") != std::string::npos;
      if (n.rfind("part iii:", 0) == 0) clean_iii = n.find("failures=0") != std::string::npos;
    }
    if (!clean_i || !clean_iii) return false;
  }
  for (const auto& [id, n] : checked)
    if (n == 0) return false;
  return any;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Z18 zero ideal weakly 1-absorbing, not 1-absorbing, witness (2,3,3)",
       kGoldenLimit, ex1},
      {2, "Z18 (9) zero-map 1-absorbing, not phi-prime, witness (3,3)", kGoldenLimit, ex3},
      {3, "Z2^4 Z2x0x0x0 w-1-absorbing, not weakly 1-absorbing", kGoldenLimit, z2_4},
      {4, "Z4 zero ideal 1-absorbing, not prime", kGoldenLimit, z4},
      {5, "implication lattice over the corpus", kLatticeLimit, [] { return all_pass("pfirst"); }},
      {6, "six-way characterization agreement over the corpus", kCharacterizationLimit,
       [] { return all_pass("tmm"); }},
      {7, "triple-zero containments, mutation caught", kCharacterizationLimit, triple_zero},
      {8, "every ideal almost 1-absorbing iff structure", kAlmostLimit, almost_everywhere},
      {9, "Zn fast path equals element-level oracle, n <= 200", kFastPathLimit, fast_path},
      {10, "transfer theorems: zero fails, nonvacuous", kCharacterizationLimit, transfer},
  };

  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    auto out = c.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit;
    const bool pass = out.pass && in_time;
    std::printf("%s %d %s [%.2fs < %.0fs%s] %s\n", pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), secs, c.limit, in_time ? "" : " EXCEEDED",
                out.detail.c_str());
    if (pass) {
      if (kKnownFailures.count(c.id)) {
        std::printf("  criterion %d is listed as a known failure but passed\n", c.id);
        ++unexpected;
      }
      continue;
    }
    if (c.id == 10 && kKnownFailures.count(10) && in_time && transfer_failure_is_known()) {
      std::printf("  known failure: the quotient converse is false; every failing "
                  "instance above is of that kind and replays\n");
      continue;
    }
    ++unexpected;
  }
  std::printf("%s: %d unexpected failure(s)\n", unexpected ? "FAILED" : "OK", unexpected);
  std::fflush(stdout);
  return unexpected ? 1 : 0;
}
