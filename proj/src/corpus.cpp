#include <algorithm>
#include <atomic>
#include <set>
#include <thread>
#include <tuple>
#include <utility>

#include "absorb/theorems.hpp"

namespace absorb {

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{
      "pfirst", "tmm",  "I3",    "principal", "tp1-abs",
      "tfac",   "loc",  "tmain", "tm1",       "tnloc",
      "tgen",   "remark-triple-zero", "remark-one-absorbing"};
  return ids;
}

std::vector<std::string> default_corpus_specs() {
  std::vector<std::string> specs;
  std::set<std::string> seen;
  auto add = [&](std::string s) {
    if (seen.insert(s).second) specs.push_back(std::move(s));
  };
  auto zn = [](int n) { return "Zn:" + std::to_string(n); };
  for (int n = 2; n <= 60; ++n) add(zn(n));
  for (int a = 2; a <= 6; ++a)
    for (int b = 2; b <= 6; ++b) add("prod(" + zn(a) + "," + zn(b) + ")");
  for (int k = 1; k <= 4; ++k) {
    if (k == 1) {
      add(zn(2));
      continue;
    }
    std::string s = "prod(";
    for (int j = 0; j < k; ++j) s += (j ? ",Zn:2" : "Zn:2");
    add(s + ")");
  }
  add("prod(Zn:2,Zn:4)");
  add("prod(Zn:4,Zn:9)");
  add("prod(Zn:2,Zn:2,Zn:3)");
  return specs;
}

namespace {

const std::vector<PhiDescriptor>& product_phis() {
  static const std::vector<PhiDescriptor> phis{
      PhiDescriptor::empty(), PhiDescriptor::zero(), PhiDescriptor::power(2),
      PhiDescriptor::omega()};
  return phis;
}

bool is_product_theorem(const std::string& id) {
  return id == "tm1" || id == "tnloc" || id == "tgen";
}

TheoremVerdict error_verdict(const std::string& theorem, const std::string& ring,
                             const std::string& message) {
  TheoremVerdict v;
  v.theorem = theorem;
  v.ring = ring;
  v.status = VerdictStatus::Error;
  v.notes.push_back(message);
  return v;
}

std::vector<TheoremVerdict> run_cell(const RingHandle& r,
                                     const std::string& id,
                                     const SuiteOptions& suite) {
  if (id == "pfirst") return {verify_implication_lattice(r, suite)};
  if (id == "tmm") return {verify_characterizations(r, suite)};
  if (id == "I3") return {verify_triple_zero_consequences(r, suite)};
  if (id == "principal") return {verify_principal(r, suite)};
  if (id == "tp1-abs") return {verify_phi_prime_equivalence(r, suite)};
  if (id == "tfac") return {verify_quotient_transfer(r, suite)};
  if (id == "loc") return {verify_localization_transfer(r, suite)};
  if (id == "tmain") return {verify_every_ideal_almost(r, suite)};
  if (id == "remarks") return check_remarks(r, suite);
  if (is_product_theorem(id)) {
    auto all = verify_product_theorems(r->factors(), product_phis(), suite);
    std::vector<TheoremVerdict> out;
    for (auto& v : all)
      if (v.theorem == id) out.push_back(std::move(v));
    return out;
  }
  fail(ErrorKind::InvalidInput, "unknown theorem id: " + id);
}

bool product_applicable(const RingHandle& r, const std::string& id) {
  if (r->kind() != RingKind::Product) return false;
  const auto n = r->factors().size();
  if (id == "tgen") return n == 2 || n == 3;
  return n == 2;
}

}  // namespace

std::vector<TheoremVerdict> run_corpus(const std::vector<std::string>& specs,
                                       const CorpusOptions& options) {
  const auto& ids = theorem_ids();
  for (const auto& t : options.theorems)
    if (std::find(ids.begin(), ids.end(), t) == ids.end())
      fail(ErrorKind::InvalidInput, "unknown theorem id: " + t);
  auto selected = [&](const std::string& id) {
    return options.theorems.empty() ||
           std::find(options.theorems.begin(), options.theorems.end(), id) !=
               options.theorems.end();
  };

  struct Cell {
    std::size_t ring;
    std::string theorem;
    std::vector<TheoremVerdict> out;
  };
  std::vector<RingHandle> rings(specs.size());
  std::vector<std::string> names(specs.size());
  std::vector<Cell> cells;
  for (std::size_t k = 0; k < specs.size(); ++k) {
    try {
      rings[k] = parse_ring_spec(specs[k]);
      names[k] = rings[k]->spec();
    } catch (const Error& e) {
      names[k] = specs[k];
      cells.push_back({k, "*", {error_verdict("*", specs[k], e.what())}});
      continue;
    }
    bool remarks = false;
    for (const auto& id : ids) {
      if (!selected(id)) continue;
      if (is_product_theorem(id) && !product_applicable(rings[k], id)) continue;
      if (id.rfind("remark-", 0) == 0) {
        if (!std::exchange(remarks, true)) cells.push_back({k, "remarks", {}});
        continue;
      }
      cells.push_back({k, id, {}});
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c; (c = next.fetch_add(1)) < cells.size();) {
      auto& cell = cells[c];
      if (!cell.out.empty()) continue;
      try {
        cell.out = run_cell(rings[cell.ring], cell.theorem, options.suite);
      } catch (const Error& e) {
        cell.out = {error_verdict(cell.theorem, names[cell.ring], e.what())};
      }
    }
  };
  unsigned jobs = options.jobs ? options.jobs : std::thread::hardware_concurrency();
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cells.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<TheoremVerdict> out;
  for (auto& cell : cells)
    for (auto& v : cell.out)
      if (v.theorem == "*" || selected(v.theorem)) out.push_back(std::move(v));
  return out;
}

bool replay_counterexample(const Instance& c, const SuiteOptions& options) {
  const auto r = parse_ring_spec(c.ring);
  const auto i = ideal_from_generators(r, c.ideal_generators);
  if (!i.is_proper()) return false;
  const auto v = options.evaluator(bind_phi(parse_phi_spec(c.phi), r), i);
  if (c.witness) return replay(i, v, *c.witness);

  // Containment claims: elements = (x, y, z, e), a triple zero and an
  // element e whose product with the claim's factor escapes φ(I).
  if (c.elements.size() != 4) return false;
  const auto [x, y, z, e] =
      std::tuple{c.elements[0], c.elements[1], c.elements[2], c.elements[3]};
  for (auto u : {x, y, z})
    if (u >= r->order() || r->is_unit(u)) return false;
  if (e >= r->order()) return false;
  const auto xy = r->mul(x, y);
  if (!v.contains(r->mul(xy, z)) || i.contains(xy) || i.contains(z))
    return false;
  const auto i2 = ideal_power(i, 2);
  const auto i3 = ideal_power(i, 3);
  ElementId factor;
  const Ideal* set;
  if (c.claim == "xyI") factor = xy, set = &i;
  else if (c.claim == "xzI") factor = r->mul(x, z), set = &i;
  else if (c.claim == "yzI") factor = r->mul(y, z), set = &i;
  else if (c.claim == "xI2") factor = x, set = &i2;
  else if (c.claim == "yI2") factor = y, set = &i2;
  else if (c.claim == "zI2") factor = z, set = &i2;
  else if (c.claim == "I3") factor = r->one(), set = &i3;
  else return false;
  return set->contains(e) && !v.contains(r->mul(factor, e));
}

}  // namespace absorb
