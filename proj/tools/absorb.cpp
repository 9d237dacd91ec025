// absorb: classify ideals of finite commutative rings, run the theorem
// suite over ring corpora, and search for instances of flag expressions.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse/validation
// error, 3 resource bound exceeded.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "absorb/report.hpp"

namespace {

using absorb::ErrorKind;
using nlohmann::json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::TooLarge ? kExitBound : kExitUsage;
}

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const auto end = item.find(',', start);
      const auto part = item.substr(start, end - start);
      if (!part.empty()) out.push_back(part);
      if (end == std::string::npos) break;
      start = end + 1;
    }
  }
  return out;
}

struct Output {
  bool csv = false;
  bool timing = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(json report, const std::string& csv_text) const {
    if (csv) {
      std::cout << csv_text;
      return;
    }
    if (timing)
      report["timing_ms"] = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    std::cout << report.dump(2) << '\n';
  }
};

int run_classify(const std::string& spec, const std::vector<std::string>& phi_args,
                 const Output& out) {
  const auto r = absorb::parse_ring_spec(spec);
  std::vector<absorb::PhiDescriptor> phis;
  std::vector<std::string> names;
  for (const auto& text : phi_args)
    for (const auto& p : absorb::parse_phi_list(text)) {
      phis.push_back(bind_phi(p, r));
      names.push_back(phis.back().to_string());
    }
  const absorb::IdealLattice lattice(r);
  std::vector<absorb::Classification> rows;
  for (const auto& i : lattice.proper()) rows.push_back(absorb::classify(i, phis));
  out.emit(absorb::classify_report(r, rows, names), absorb::classify_csv(r, rows));
  return 0;
}

int run_verify(std::vector<std::string> specs, bool default_corpus,
               const std::vector<std::string>& theorems, unsigned jobs,
               const Output& out) {
  if (default_corpus) {
    const auto corpus = absorb::default_corpus_specs();
    specs.insert(specs.end(), corpus.begin(), corpus.end());
  }
  if (specs.empty()) {
    std::cerr << "error: give ring specs or --default-corpus\n";
    return kExitUsage;
  }
  std::vector<std::string> canonical;
  for (const auto& s : specs) canonical.push_back(absorb::parse_ring_spec(s)->spec());

  absorb::CorpusOptions options;
  options.theorems = split_commas(theorems);
  options.jobs = jobs;
  if (const char* env = std::getenv("ABSORB_JOBS")) {
    try {
      options.jobs = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "error: ABSORB_JOBS must be a non-negative integer\n";
      return kExitUsage;
    }
  }
  const auto verdicts = absorb::run_corpus(canonical, options);

  bool failed = false, bound = false;
  for (const auto& v : verdicts) {
    if (v.status == absorb::VerdictStatus::Fail) {
      failed = true;
      std::cerr << "FAIL " << v.theorem << " " << v.ring;
      if (v.counterexample) {
        const auto& c = *v.counterexample;
        std::cerr << ": " << c.claim << " ring=" << c.ring << " phi=" << c.phi
                  << " ideal=(";
        for (std::size_t k = 0; k < c.ideal_generators.size(); ++k)
          std::cerr << (k ? "," : "") << c.ideal_generators[k];
        std::cerr << ")";
        const auto& el = c.witness ? c.witness->elements : c.elements;
        if (!el.empty()) {
          std::cerr << " elements=";
          for (std::size_t k = 0; k < el.size(); ++k)
            std::cerr << (k ? "," : "") << el[k];
        }
      }
      std::cerr << '\n';
    } else if (v.status == absorb::VerdictStatus::Error) {
      bound = true;
      std::cerr << "ERROR " << v.theorem << " " << v.ring << ": "
                << (v.notes.empty() ? "" : v.notes.front()) << '\n';
    }
  }
  out.emit(absorb::verify_report(canonical, verdicts), absorb::verdicts_csv(verdicts));
  if (failed) return kExitFail;
  return bound ? kExitBound : 0;
}

int run_search(const std::string& query, unsigned zn_max, bool no_products,
               const Output& out) {
  const auto expr = absorb::PredicateExpr::parse(query);
  absorb::SearchOptions options;
  options.zn_max = zn_max;
  options.include_products = !no_products;
  const auto result = absorb::search(expr, options);
  if (!result.found)
    std::cerr << "no instance found after " << result.rings_searched
              << " rings and " << result.ideals_searched << " ideals\n";
  json report = absorb::search_report(query, result);
  std::string csv = "found,ring,gens\n";
  csv += result.found ? "true," + result.ring + "," : "false,,";
  if (result.ideal)
    for (std::size_t k = 0; k < result.ideal->generators().size(); ++k)
      csv += (k ? " " : "") + std::to_string(result.ideal->generators()[k]);
  out.emit(std::move(report), csv + "\n");
  if (result.found && !result.verified) {
    std::cerr << "error: found instance did not replay\n";
    return kExitFail;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify ideals of finite commutative rings and check "
               "1-absorbing prime theorems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", absorb::kVersion);

  Output out;
  bool json_flag = false;

  auto add_format = [&](CLI::App* sub) {
    auto* j = sub->add_flag("--json", json_flag, "JSON output (default)");
    auto* c = sub->add_flag("--csv", out.csv, "CSV output");
    j->excludes(c);
    sub->add_flag("--timing", out.timing, "Include wall time in JSON output");
  };

  std::string classify_spec;
  std::vector<std::string> phi_args;
  auto* classify = app.add_subcommand("classify", "Classify every proper ideal of a ring");
  classify->add_option("spec", classify_spec, "Ring spec, e.g. Zn:18 or prod(Zn:2,Zn:3)")
      ->required();
  classify->add_option("--phi", phi_args,
                       "Comma-separated φ specs: empty, zero, pow:<m>, omega, prod(...)");
  add_format(classify);

  std::vector<std::string> verify_specs, theorems;
  bool default_corpus = false;
  unsigned jobs = 0;
  auto* verify = app.add_subcommand("verify", "Run the theorem suite");
  verify->add_option("specs", verify_specs, "Ring specs");
  verify->add_flag("--default-corpus", default_corpus, "Run the built-in corpus");
  verify->add_option("--theorem", theorems, "Theorem ids (repeatable or comma-separated)");
  verify->add_option("--jobs", jobs, "Worker threads (0 = all cores); ABSORB_JOBS overrides");
  add_format(verify);

  std::string query;
  unsigned zn_max = 60;
  bool no_products = false;
  auto* search = app.add_subcommand("search", "Find the smallest ideal satisfying a flag expression");
  search->add_option("expr", query, "Expression, e.g. \"weakly_one_absorbing & !one_absorbing\"")
      ->required();
  search->add_option("--zn-max", zn_max, "Largest n for Zn rings (default 60)");
  search->add_flag("--no-products", no_products, "Search Zn rings only");
  add_format(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*classify) return run_classify(classify_spec, phi_args, out);
    if (*verify) return run_verify(verify_specs, default_corpus, theorems, jobs, out);
    if (*search) return run_search(query, zn_max, no_products, out);
  } catch (const absorb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}
