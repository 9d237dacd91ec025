#include <doctest.h>

#include <algorithm>

#include "absorb/report.hpp"
#include "support.hpp"

using namespace absorb;

namespace {

bool has_note(const TheoremVerdict& v, const std::string& prefix) {
  return std::any_of(v.notes.begin(), v.notes.end(), [&](const std::string& n) {
    return n.rfind(prefix, 0) == 0;
  });
}

// Transported quotient maps collapse to ∅.
SuiteOptions empty_quotient_maps() {
  SuiteOptions o;
  o.evaluator = [](const PhiDescriptor& d, const Ideal& i) {
    if (d.kind() == PhiDescriptor::Kind::Quotient) return PhiValue::empty_marker(i.ring());
    return eval_phi(d, i);
  };
  return o;
}

std::vector<TheoremVerdict> corpus_run(const std::string& theorem,
                                       const SuiteOptions& suite = {}) {
  CorpusOptions o;
  o.theorems = {theorem};
  o.suite = suite;
  return run_corpus(default_corpus_specs(), o);
}

}  // namespace

TEST_CASE("triple-zero consequences") {
  const auto z18 = make_zn(18);
  const auto i9 = principal(z18, 9);
  CHECK(verify_triple_zero_consequences(z18, i9, PhiDescriptor::zero()).status ==
        VerdictStatus::Pass);
  CHECK(verify_triple_zero_consequences(z18, i9, PhiDescriptor::empty()).status ==
        VerdictStatus::NotApplicable);
  const auto all = verify_triple_zero_consequences(z18);
  CHECK(all.status == VerdictStatus::Pass);
  CHECK(all.checked > 0);
}

TEST_CASE("principal ideals") {
  const auto z18 = make_zn(18);
  const auto a3 = verify_principal(z18, 3);
  CHECK(a3.status == VerdictStatus::Pass);
  CHECK(a3.checked > 0);
  CHECK(verify_principal(z18, 9).status == VerdictStatus::NotApplicable);
  CHECK(verify_principal(z18, 1).status == VerdictStatus::NotApplicable);
  CHECK(verify_principal(z18).status == VerdictStatus::Pass);
}

TEST_CASE("phi-prime equivalence") {
  const auto z18 = verify_phi_prime_equivalence(make_zn(18));
  CHECK(z18.status == VerdictStatus::Pass);
  CHECK(z18.skipped > 0);
  const auto z8 = verify_phi_prime_equivalence(make_zn(8));
  CHECK(z8.status == VerdictStatus::NotApplicable);
  CHECK(has_note(z8, "quasi-local"));
}

TEST_CASE("quotient transfer") {
  const auto z18 = verify_quotient_transfer(make_zn(18));
  CHECK(z18.status == VerdictStatus::Pass);
  CHECK(has_note(z18, "part i: checked="));
  CHECK(has_note(z18, "part iii: checked="));
  CHECK(verify_quotient_transfer(make_zn(8)).status == VerdictStatus::Pass);
}

TEST_CASE("known counterexample to the quotient converse in Z24") {
  // I = (4), φ = pow:2, φ(I) = (8): R/φ(I) ≅ Z8 has (4)/(8) weakly
  // 1-absorbing and units lift, yet (2,3,2) violates φ-1-absorbing primeness
  // of (4) in Z24 because 3 is a nonunit there and a unit in Z8.
  const auto v = verify_quotient_transfer(make_zn(24));
  REQUIRE(v.status == VerdictStatus::Fail);
  REQUIRE(v.counterexample.has_value());
  const auto& c = *v.counterexample;
  CHECK(c.claim == "(ii) converse");
  CHECK(c.ring == "Zn:24");
  CHECK(c.phi == "pow:2");
  CHECK(c.ideal_generators == std::vector<ElementId>{4});
  REQUIRE(c.witness.has_value());
  CHECK(c.witness->elements == std::vector<ElementId>{2, 3, 2});
  CHECK(replay_counterexample(c));
  CHECK(has_note(v, "part i: checked="));
  CHECK(has_note(v, "part iii: checked="));
  CHECK(std::find_if(v.notes.begin(), v.notes.end(), [](const std::string& n) {
          return n.rfind("part i:", 0) == 0 && n.find("failures=0") != std::string::npos;
        }) != v.notes.end());
}

TEST_CASE("localization transfer") {
  const auto z18 = make_zn(18);
  CHECK(verify_localization_transfer(z18, MultSet(z18, {5})).status ==
        VerdictStatus::Pass);
  const auto at2 = verify_localization_transfer(z18, MultSet(z18, {2}));
  CHECK(at2.status == VerdictStatus::Pass);
  CHECK(at2.checked > 0);
  // 9 ∈ closure{3} ∩ (9): that ideal is skipped.
  const auto at3 = verify_localization_transfer(z18, MultSet(z18, {3}));
  CHECK(at3.status != VerdictStatus::Fail);
  CHECK(at3.skipped > 0);
  const auto all = verify_localization_transfer(z18);
  CHECK(all.status == VerdictStatus::Pass);
  CHECK(has_note(all, "multiplicative sets="));
}

TEST_CASE("product theorems") {
  const auto z2 = make_zn(2), z3 = make_zn(3);
  // With the zero map alone every φ_k(I_k) is the maximal ideal of a
  // field, so tnloc has no eligible instance; the empty map supplies some.
  const auto zero_only = verify_product_theorems({z2, z3}, {PhiDescriptor::zero()});
  CHECK(zero_only[1].status == VerdictStatus::NotApplicable);
  const auto two = verify_product_theorems({z2, z3}, {PhiDescriptor::zero(),
                                                      PhiDescriptor::empty()});
  REQUIRE(two.size() == 3);
  CHECK(two[0].theorem == "tm1");
  CHECK(two[1].theorem == "tnloc");
  CHECK(two[2].theorem == "tgen");
  for (const auto& v : two) CHECK(v.status != VerdictStatus::Fail);
  CHECK(two[1].status == VerdictStatus::Pass);

  const auto three = verify_product_theorems({z2, z2, z3}, {PhiDescriptor::zero(),
                                                            PhiDescriptor::empty()});
  const auto gen = std::find_if(three.begin(), three.end(),
                                [](const TheoremVerdict& v) { return v.theorem == "tgen"; });
  REQUIRE(gen != three.end());
  CHECK(gen->status == VerdictStatus::Pass);
  CHECK(gen->checked > 0);
}

TEST_CASE("every proper ideal almost 1-absorbing") {
  auto notes_of = [](const char* spec) {
    const auto v = verify_every_ideal_almost(parse_ring_spec(spec));
    CHECK(v.status == VerdictStatus::Pass);
    return v;
  };
  CHECK(has_note(notes_of("Zn:8"), "lhs=true rhs=true"));
  CHECK(has_note(notes_of("Zn:6"), "lhs=true rhs=true"));
  const auto z12 = notes_of("Zn:12");
  CHECK(has_note(z12, "lhs=false rhs=false"));
  REQUIRE(z12.evidence.has_value());
  CHECK(replay_counterexample(*z12.evidence));
}

TEST_CASE("implication lattice and characterizations on small rings") {
  for (const char* spec : {"Zn:18", "Zn:16", "prod(Zn:2,Zn:4)"}) {
    CAPTURE(spec);
    const auto r = parse_ring_spec(spec);
    const auto lat = verify_implication_lattice(r);
    CHECK(lat.status == VerdictStatus::Pass);
    CHECK(lat.checked > 0);
    const auto tmm = verify_characterizations(r);
    CHECK(tmm.status == VerdictStatus::Pass);
    CHECK(tmm.checked > 0);
  }
}

TEST_CASE("remarks are informational") {
  for (const auto& v : check_remarks(make_zn(24))) {
    CHECK(v.status == VerdictStatus::Info);
    CHECK(has_note(v, "literal mismatches="));
    CHECK(has_note(v, "nonunit mismatches="));
  }
}

TEST_CASE("corpus runner") {
  CHECK(run_corpus({}).empty());
  CHECK(theorem_ids().size() == 13);

  const auto bad = run_corpus({"Zn:1", "Zn:300"});
  REQUIRE(bad.size() >= 2);
  CHECK(bad.front().status == VerdictStatus::Error);
  CHECK(bad.front().theorem == "*");
  CHECK(std::any_of(bad.begin(), bad.end(), [](const TheoremVerdict& v) {
    return v.ring == "Zn:300" && v.status == VerdictStatus::Error;
  }));

  CorpusOptions one, many;
  one.jobs = 1;
  many.jobs = 4;
  const std::vector<std::string> specs{"Zn:12", "Zn:8", "prod(Zn:2,Zn:3)"};
  const auto a = verify_report(specs, run_corpus(specs, one)).dump();
  const auto b = verify_report(specs, run_corpus(specs, many)).dump();
  CHECK(a == b);

  CorpusOptions only;
  only.theorems = {"tmain", "remark-triple-zero"};
  const auto sel = run_corpus({"Zn:12"}, only);
  REQUIRE(sel.size() == 2);
  CHECK(sel[0].theorem == "tmain");
  CHECK(sel[1].theorem == "remark-triple-zero");
}

TEST_CASE("fail verdicts on the default corpus replay") {
  const auto all = run_corpus(default_corpus_specs());
  std::size_t fails = 0;
  for (const auto& v : all) {
    if (v.status != VerdictStatus::Fail) continue;
    ++fails;
    CAPTURE(v.theorem);
    CAPTURE(v.ring);
    REQUIRE(v.counterexample.has_value());
    CHECK(replay_counterexample(*v.counterexample));
  }
  CHECK(fails > 0);  // the quotient converse, see above
}

TEST_CASE("mutation: corrupted phi is caught by the triple-zero check") {
  const auto opts = support::triple_product_mutation();
  const auto verdicts = corpus_run("I3", opts);
  std::size_t fails = 0;
  for (const auto& v : verdicts) {
    if (v.status != VerdictStatus::Fail) continue;
    ++fails;
    REQUIRE(v.counterexample.has_value());
    CHECK(replay_counterexample(*v.counterexample, opts));
    CHECK_FALSE(replay_counterexample(*v.counterexample));
  }
  CHECK(fails >= 1);
}

TEST_CASE("mutation: corrupted quotient map is caught") {
  const auto opts = empty_quotient_maps();
  const auto v = verify_quotient_transfer(make_zn(8), opts);
  REQUIRE(v.status == VerdictStatus::Fail);
  REQUIRE(v.counterexample.has_value());
  CHECK(v.counterexample->claim == "(iii) I/J phi_J-1-absorbing");
  CHECK(replay_counterexample(*v.counterexample, opts));
  CHECK_FALSE(replay_counterexample(*v.counterexample));
}
