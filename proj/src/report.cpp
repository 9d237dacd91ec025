#include "absorb/report.hpp"

#include <map>
#include <set>
#include <sstream>

namespace absorb {

using nlohmann::json;

namespace {

json element_list(std::span<const ElementId> xs) {
  return json(std::vector<ElementId>(xs.begin(), xs.end()));
}

json element_text(const Ring& r, std::span<const ElementId> xs) {
  json out = json::array();
  for (auto x : xs) out.push_back(r.format_element(x));
  return out;
}

json witness_json(const Ring& r, const Witness& w) {
  return {{"kind", std::string(to_string(w.kind))},
          {"elements", element_list(w.elements)},
          {"text", element_text(r, w.elements)}};
}

// Flags of a row in insertion-independent (sorted) order.
std::map<std::string, const Check*> checks_of(const Classification& c,
                                              const Check*& two_absorbing) {
  std::map<std::string, const Check*> out{
      {"prime", &c.prime},
      {"weakly_prime", &c.weakly_prime},
      {"almost_prime", &c.almost_prime},
      {"weakly_two_absorbing", &c.weakly_two_absorbing},
      {"one_absorbing_prime", &c.one_absorbing_prime},
      {"weakly_one_absorbing", &c.weakly_one_absorbing},
      {"w_one_absorbing", &c.w_one_absorbing},
      {"almost_one_absorbing", &c.almost_one_absorbing}};
  two_absorbing = c.two_absorbing ? &*c.two_absorbing : nullptr;
  for (const auto& [m, check] : c.n_almost)
    out.emplace("n_almost_" + std::to_string(m), &check);
  for (const auto& [phi, check] : c.phi_prime)
    out.emplace(phi_flag_key("phi_prime", phi), &check);
  for (const auto& [phi, check] : c.phi_one_absorbing)
    out.emplace(phi_flag_key("phi_one_absorbing", phi), &check);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string join(std::span<const ElementId> xs) {
  std::string out;
  for (auto x : xs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

json instance_json(const Instance& c) {
  json out{{"ring", c.ring},
           {"ideal_generators", c.ideal_generators},
           {"phi", c.phi},
           {"claim", c.claim},
           {"elements", c.elements},
           {"witness", nullptr}};
  if (c.witness) {
    out["witness"] = {{"kind", std::string(to_string(c.witness->kind))},
                      {"elements", c.witness->elements}};
  }
  return out;
}

}  // namespace

std::string phi_flag_key(const std::string& family, const std::string& phi) {
  return family + "[" + phi + "]";
}

json classification_json(const Classification& c) {
  const auto& r = *c.ideal.ring();
  json row{{"gens", element_list(c.ideal.generators())},
           {"elements", element_list(c.ideal.elements())},
           {"text", element_text(r, c.ideal.generators())},
           {"size", c.ideal.size()}};
  json flags = json::object();
  json witnesses = json::object();
  const Check* two = nullptr;
  for (const auto& [name, check] : checks_of(c, two)) {
    flags[name] = check->holds;
    if (check->witness) witnesses[name] = witness_json(r, *check->witness);
  }
  flags["two_absorbing"] = two ? json(two->holds) : json(nullptr);
  if (two && two->witness)
    witnesses["two_absorbing"] = witness_json(r, *two->witness);
  row["flags"] = std::move(flags);
  row["witnesses"] = std::move(witnesses);
  return row;
}

json verdict_json(const TheoremVerdict& v) {
  return {{"theorem", v.theorem},
          {"ring", v.ring},
          {"status", std::string(to_string(v.status))},
          {"checked", v.checked},
          {"skipped", v.skipped},
          {"notes", v.notes},
          {"counterexample",
           v.counterexample ? instance_json(*v.counterexample) : json(nullptr)},
          {"evidence", v.evidence ? instance_json(*v.evidence) : json(nullptr)}};
}

json classify_report(const RingHandle& r,
                     const std::vector<Classification>& rows,
                     const std::vector<std::string>& phis) {
  json ideals = json::array();
  for (const auto& c : rows) ideals.push_back(classification_json(c));
  return {{"version", kVersion},
          {"ring", r->spec()},
          {"order", r->order()},
          {"phis", phis},
          {"ideals", std::move(ideals)},
          {"verdicts", json::array()}};
}

std::string classify_csv(const RingHandle& r,
                         const std::vector<Classification>& rows) {
  std::set<std::string> columns{"two_absorbing"};
  for (const auto& c : rows) {
    const Check* two = nullptr;
    for (const auto& [name, check] : checks_of(c, two)) columns.insert(name);
  }
  std::ostringstream out;
  out << "ring,gens,size";
  for (const auto& col : columns) out << ',' << csv_field(col);
  for (const auto& col : columns) out << ',' << csv_field("witness:" + col);
  out << '\n';
  for (const auto& c : rows) {
    const Check* two = nullptr;
    auto checks = checks_of(c, two);
    if (two) checks.emplace("two_absorbing", two);
    out << csv_field(r->spec()) << ',' << join(c.ideal.generators()) << ','
        << c.ideal.size();
    for (const auto& col : columns) {
      out << ',';
      if (auto it = checks.find(col); it != checks.end())
        out << (it->second->holds ? "true" : "false");
    }
    for (const auto& col : columns) {
      out << ',';
      if (auto it = checks.find(col); it != checks.end() && it->second->witness)
        out << join(it->second->witness->elements);
    }
    out << '\n';
  }
  return out.str();
}

json verify_report(const std::vector<std::string>& specs,
                   const std::vector<TheoremVerdict>& verdicts) {
  json list = json::array();
  std::map<std::string, std::uint64_t> summary;
  for (const auto& v : verdicts) {
    list.push_back(verdict_json(v));
    ++summary[std::string(to_string(v.status))];
  }
  return {{"version", kVersion},
          {"ring", specs},
          {"ideals", json::array()},
          {"verdicts", std::move(list)},
          {"summary", summary}};
}

std::string verdicts_csv(const std::vector<TheoremVerdict>& verdicts) {
  std::ostringstream out;
  out << "theorem,ring,status,checked,skipped,claim,notes\n";
  for (const auto& v : verdicts) {
    std::string notes;
    for (const auto& n : v.notes) notes += (notes.empty() ? "" : "; ") + n;
    out << csv_field(v.theorem) << ',' << csv_field(v.ring) << ','
        << to_string(v.status) << ',' << v.checked << ',' << v.skipped << ','
        << csv_field(v.counterexample ? v.counterexample->claim : "") << ','
        << csv_field(notes) << '\n';
  }
  return out.str();
}

json search_report(const std::string& query, const SearchResult& result) {
  json out{{"version", kVersion},
           {"query", query},
           {"found", result.found},
           {"ring", nullptr},
           {"ideals", json::array()},
           {"verdicts", json::array()},
           {"verified", result.verified},
           {"searched",
            {{"rings", result.rings_searched},
             {"ideals", result.ideals_searched}}}};
  if (!result.found) return out;
  const auto& i = *result.ideal;
  const auto& r = *i.ring();
  json flags = json::object();
  for (const auto& [name, value] : result.flags)
    flags[name] = value ? json(*value) : json(nullptr);
  json witnesses = json::object();
  for (const auto& [name, w] : result.witnesses)
    witnesses[name] = witness_json(r, w);
  out["ring"] = result.ring;
  out["ideals"].push_back({{"gens", element_list(i.generators())},
                           {"elements", element_list(i.elements())},
                           {"text", element_text(r, i.generators())},
                           {"size", i.size()},
                           {"flags", std::move(flags)},
                           {"witnesses", std::move(witnesses)}});
  return out;
}

}  // namespace absorb
