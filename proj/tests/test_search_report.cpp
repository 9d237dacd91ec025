#include <doctest.h>

#include <algorithm>
#include <set>

#include "absorb/report.hpp"
#include "support.hpp"

using namespace absorb;
using nlohmann::json;

namespace {

ErrorKind parse_error(const char* text) {
  try {
    PredicateExpr::parse(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("predicate parsing") {
  const auto e = PredicateExpr::parse("weakly_one_absorbing & !one_absorbing");
  CHECK(e.flags() == std::vector<std::string>{"weakly_one_absorbing", "one_absorbing_prime"});
  CHECK(e.to_string() == "(weakly_one_absorbing & !one_absorbing_prime)");
  CHECK(PredicateExpr::parse("prime || weakly_prime && n_almost_3").to_string() ==
        "(prime | (weakly_prime & n_almost_3))");
  CHECK(PredicateExpr::parse("¬(prime ∨ w_one_absorbing) ∧ almost_prime").to_string() ==
        "(!(prime | w_one_absorbing) & almost_prime)");

  auto truth = [](const char* text, std::set<std::string> on) {
    return PredicateExpr::parse(text).eval(
        [&](const std::string& f) { return on.count(f) > 0; });
  };
  CHECK(truth("prime | !prime", {}));
  CHECK_FALSE(truth("prime & !prime", {"prime"}));
  CHECK(truth("(prime | weakly_prime) & !two_absorbing", {"weakly_prime"}));

  CHECK(parse_error("no_such_flag") == ErrorKind::ParseError);
  CHECK(parse_error("prime &") == ErrorKind::ParseError);
  CHECK(parse_error("(prime") == ErrorKind::ParseError);
  CHECK(parse_error("prime prime") == ErrorKind::ParseError);
  CHECK(parse_error("n_almost_1") == ErrorKind::InvalidExponent);
}

TEST_CASE("flag evaluation") {
  const auto z18 = make_zn(18);
  CHECK(canonical_flag("one_absorbing") == "one_absorbing_prime");
  CHECK(evaluate_flag(zero_ideal(z18), "weakly_one_absorbing")->holds);
  CHECK_FALSE(evaluate_flag(zero_ideal(z18), "two_absorbing").has_value());
  CHECK(evaluate_flag(principal(z18, 6), "two_absorbing")->holds);
  CHECK(evaluate_flag(principal(z18, 9), "n_almost_2")->holds ==
        is_n_almost_one_absorbing(principal(z18, 9), 2).holds);
  CHECK(flag_phi("w_one_absorbing")->to_string() == "omega");
  CHECK_FALSE(flag_phi("two_absorbing").has_value());
}

TEST_CASE("search finds the smallest verified instance") {
  SearchOptions o;
  const auto a = search(PredicateExpr::parse("weakly_one_absorbing & !one_absorbing"), o);
  REQUIRE(a.found);
  CHECK(a.verified);
  CHECK(a.ring == "prod(Zn:2,Zn:2)");
  CHECK(a.ideal->is_zero());
  REQUIRE(a.witnesses.count("one_absorbing_prime"));
  CHECK(a.witnesses.at("one_absorbing_prime").elements == std::vector<ElementId>{1, 1, 2});

  const auto b = search(PredicateExpr::parse("w_one_absorbing & !weakly_one_absorbing"), o);
  REQUIRE(b.found);
  CHECK(b.verified);
  CHECK(b.ring == "prod(Zn:2,Zn:2,Zn:2)");
  CHECK(b.flags.at("w_one_absorbing") == std::optional<bool>(true));
  CHECK(b.flags.at("weakly_one_absorbing") == std::optional<bool>(false));

  // Restricted to Zn rings, the first weakly-not-1-absorbing instance is
  // at most Z18 (0).
  o.include_products = false;
  const auto c = search(PredicateExpr::parse("weakly_one_absorbing & !one_absorbing"), o);
  REQUIRE(c.found);
  CHECK(c.verified);
  CHECK(parse_ring_spec(c.ring)->order() <= 18);

  const auto none = search(PredicateExpr::parse("prime & !prime"), SearchOptions{});
  CHECK_FALSE(none.found);
  CHECK(none.rings_searched == search_space(SearchOptions{}).size());
  CHECK(none.ideals_searched > 0);

  SearchOptions bad;
  bad.zn_max = 1;
  CHECK_THROWS_AS(search(PredicateExpr::parse("prime"), bad), Error);
}

TEST_CASE("search space order") {
  const auto space = search_space(SearchOptions{});
  std::uint64_t prev = 0;
  for (const auto& s : space) {
    const auto n = parse_ring_spec(s)->order();
    CHECK(n >= prev);
    prev = n;
  }
  CHECK(space.front() == "Zn:2");
}

TEST_CASE("classification report flags replay against the predicates") {
  for (const char* spec : {"Zn:18", "Zn:8", "prod(Zn:2,Zn:2,Zn:2,Zn:2)", "prod(Zn:4,Zn:3)"}) {
    CAPTURE(spec);
    const auto r = parse_ring_spec(spec);
    std::vector<PhiDescriptor> phis{PhiDescriptor::zero(), PhiDescriptor::empty()};
    std::vector<Classification> rows;
    for (const auto& i : IdealLattice(r).proper()) rows.push_back(classify(i, phis));
    const auto report = classify_report(r, rows, {"zero", "empty"});
    CHECK(report["version"] == kVersion);
    CHECK(report["ring"] == r->spec());
    CHECK(report["verdicts"].empty());
    REQUIRE(report["ideals"].size() == rows.size());
    for (const auto& row : report["ideals"]) {
      const auto gens = row["gens"].get<std::vector<ElementId>>();
      const auto i = ideal_from_generators(r, gens);
      CHECK(support::vec(i.elements()) == row["elements"].get<std::vector<ElementId>>());
      for (const auto& [name, value] : row["flags"].items()) {
        CAPTURE(name);
        if (name.rfind("phi_", 0) == 0) {
          const auto open = name.find('[');
          const auto family = name.substr(0, open);
          const auto phi = bind_phi(parse_phi_spec(name.substr(open + 1, name.size() - open - 2)), r);
          const auto c = family == "phi_prime" ? is_phi_prime(i, phi)
                                               : is_phi_one_absorbing_prime(i, phi);
          CHECK(value.get<bool>() == c.holds);
          continue;
        }
        const auto c = evaluate_flag(i, name);
        if (value.is_null()) {
          CHECK_FALSE(c.has_value());
        } else {
          REQUIRE(c.has_value());
          CHECK(value.get<bool>() == c->holds);
          if (!c->holds) CHECK(row["witnesses"][name]["elements"] ==
                               json(c->witness->elements));
        }
      }
    }
    // Canonical output: identical on a second run.
    std::vector<Classification> again;
    for (const auto& i : IdealLattice(r).proper()) again.push_back(classify(i, phis));
    CHECK(classify_report(r, again, {"zero", "empty"}).dump() == report.dump());
    CHECK(classify_csv(r, again) == classify_csv(r, rows));
  }
}

TEST_CASE("csv projections") {
  const auto r = make_zn(4);
  std::vector<Classification> rows;
  for (const auto& i : IdealLattice(r).proper()) rows.push_back(classify(i, {}));
  const auto csv = classify_csv(r, rows);
  CHECK(csv.rfind("ring,gens,size,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

  const auto v = verdicts_csv(run_corpus({"Zn:12"}));
  CHECK(v.rfind("theorem,ring,status,checked,skipped,claim,notes\n", 0) == 0);
  CHECK(v.find("tmain,Zn:12,pass") != std::string::npos);
}

TEST_CASE("verify report shape") {
  const std::vector<std::string> specs{"Zn:12"};
  const auto j = verify_report(specs, run_corpus(specs));
  CHECK(j["ring"] == json(specs));
  CHECK(j["ideals"].empty());
  CHECK(j["summary"]["pass"].get<int>() > 0);
  for (const auto& v : j["verdicts"]) {
    CHECK(v.contains("theorem"));
    CHECK(v.contains("status"));
    CHECK(v.contains("checked"));
    CHECK(v.contains("skipped"));
  }
  const auto s = search_report("prime & !prime", search(PredicateExpr::parse("prime & !prime"),
                                                       SearchOptions{}));
  CHECK(s["found"] == false);
  CHECK(s["ring"].is_null());
  CHECK(s["searched"]["rings"].get<int>() > 0);
}
