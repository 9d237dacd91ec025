#include "absorb/search.hpp"

#include <algorithm>
#include <cctype>

#include "absorb/theorems.hpp"

namespace absorb {

const std::vector<std::string>& flag_names() {
  static const std::vector<std::string> names{
      "prime",
      "weakly_prime",
      "almost_prime",
      "two_absorbing",
      "weakly_two_absorbing",
      "one_absorbing_prime",
      "weakly_one_absorbing",
      "w_one_absorbing",
      "almost_one_absorbing"};
  return names;
}

std::string canonical_flag(std::string_view name) {
  if (name == "one_absorbing") return "one_absorbing_prime";
  const auto& names = flag_names();
  if (std::find(names.begin(), names.end(), name) != names.end())
    return std::string(name);
  constexpr std::string_view prefix = "n_almost_";
  if (name.substr(0, prefix.size()) == prefix) {
    const auto digits = name.substr(prefix.size());
    if (!digits.empty() && digits.size() <= 4 &&
        std::all_of(digits.begin(), digits.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const auto m = std::stoul(std::string(digits));
      if (m < 2)
        fail(ErrorKind::InvalidExponent, "n_almost needs m >= 2");
      return "n_almost_" + std::to_string(m);
    }
  }
  fail(ErrorKind::ParseError, "unknown flag name: " + std::string(name));
}

std::optional<Check> evaluate_flag(const Ideal& i, const std::string& flag) {
  const auto name = canonical_flag(flag);
  if (name == "prime") return is_prime(i);
  if (name == "weakly_prime") return is_weakly_prime(i);
  if (name == "almost_prime") return is_almost_prime(i);
  if (name == "two_absorbing") {
    if (i.is_zero()) return std::nullopt;
    return is_two_absorbing(i);
  }
  if (name == "weakly_two_absorbing") return is_weakly_two_absorbing(i);
  if (name == "one_absorbing_prime") return is_one_absorbing_prime(i);
  if (name == "weakly_one_absorbing") return is_weakly_one_absorbing(i);
  if (name == "w_one_absorbing") return is_w_one_absorbing(i);
  if (name == "almost_one_absorbing") return is_almost_one_absorbing(i);
  const auto m = static_cast<unsigned>(std::stoul(name.substr(9)));
  return is_n_almost_one_absorbing(i, m);
}

std::optional<PhiDescriptor> flag_phi(const std::string& flag) {
  const auto name = canonical_flag(flag);
  if (name == "prime" || name == "one_absorbing_prime")
    return PhiDescriptor::empty();
  if (name == "weakly_prime" || name == "weakly_one_absorbing")
    return PhiDescriptor::zero();
  if (name == "almost_prime" || name == "almost_one_absorbing")
    return PhiDescriptor::power(2);
  if (name == "w_one_absorbing") return PhiDescriptor::omega();
  if (name.rfind("n_almost_", 0) == 0)
    return PhiDescriptor::power(static_cast<unsigned>(std::stoul(name.substr(9))));
  return std::nullopt;
}

struct PredicateExpr::Node {
  enum class Op { Flag, Not, And, Or } op;
  std::string flag;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = PredicateExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

class ExprParser {
 public:
  ExprParser(std::string_view text, std::vector<std::string>& flags)
      : text_(text), flags_(flags) {}

  NodePtr parse() {
    auto n = expr();
    skip_space();
    if (pos_ != text_.size()) error("unexpected input");
    return n;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError,
         what + " at offset " + std::to_string(pos_) + " in predicate");
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(std::initializer_list<std::string_view> tokens) {
    skip_space();
    for (auto tok : tokens)
      if (text_.substr(pos_, tok.size()) == tok) {
        pos_ += tok.size();
        return true;
      }
    return false;
  }

  NodePtr expr() {
    auto n = term();
    while (accept({"||", "|", "∨"}))
      n = std::make_shared<const Node>(Node{Node::Op::Or, {}, n, term()});
    return n;
  }

  NodePtr term() {
    auto n = factor();
    while (accept({"&&", "&", "∧"}))
      n = std::make_shared<const Node>(Node{Node::Op::And, {}, n, factor()});
    return n;
  }

  NodePtr factor() {
    if (accept({"!", "¬"}))
      return std::make_shared<const Node>(Node{Node::Op::Not, {}, factor(), {}});
    if (accept({"("})) {
      auto n = expr();
      if (!accept({")"})) error("expected ')'");
      return n;
    }
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) error("expected a flag name");
    const auto name = canonical_flag(text_.substr(start, pos_ - start));
    if (std::find(flags_.begin(), flags_.end(), name) == flags_.end())
      flags_.push_back(name);
    return std::make_shared<const Node>(Node{Node::Op::Flag, name, {}, {}});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string>& flags_;
};

bool eval_node(const Node& n,
               const std::function<bool(const std::string&)>& flag) {
  switch (n.op) {
    case Node::Op::Flag: return flag(n.flag);
    case Node::Op::Not: return !eval_node(*n.lhs, flag);
    case Node::Op::And: return eval_node(*n.lhs, flag) && eval_node(*n.rhs, flag);
    case Node::Op::Or: return eval_node(*n.lhs, flag) || eval_node(*n.rhs, flag);
  }
  return false;
}

std::string show(const Node& n) {
  switch (n.op) {
    case Node::Op::Flag: return n.flag;
    case Node::Op::Not: return "!" + show(*n.lhs);
    case Node::Op::And: return "(" + show(*n.lhs) + " & " + show(*n.rhs) + ")";
    case Node::Op::Or: return "(" + show(*n.lhs) + " | " + show(*n.rhs) + ")";
  }
  return {};
}

}  // namespace

PredicateExpr PredicateExpr::parse(std::string_view text) {
  PredicateExpr e;
  e.root_ = ExprParser(text, e.flags_).parse();
  return e;
}

bool PredicateExpr::eval(
    const std::function<bool(const std::string&)>& flag) const {
  return eval_node(*root_, flag);
}

std::string PredicateExpr::to_string() const { return show(*root_); }

std::vector<std::string> search_space(const SearchOptions& options) {
  if (options.zn_max < 2)
    fail(ErrorKind::InvalidInput, "--zn-max must be at least 2");
  std::vector<std::pair<std::uint64_t, std::string>> rings;
  for (unsigned n = 2; n <= options.zn_max; ++n)
    rings.emplace_back(n, "Zn:" + std::to_string(n));
  if (options.include_products)
    for (const auto& spec : default_corpus_specs()) {
      if (spec.rfind("prod(", 0) != 0) continue;
      rings.emplace_back(parse_ring_spec(spec)->order(), spec);
    }
  std::sort(rings.begin(), rings.end());
  std::vector<std::string> out;
  for (auto& [order, spec] : rings) out.push_back(std::move(spec));
  return out;
}

SearchResult search(const PredicateExpr& expr, const SearchOptions& options) {
  SearchResult result;
  for (const auto& spec : search_space(options)) {
    const auto r = parse_ring_spec(spec);
    ++result.rings_searched;
    const IdealLattice lattice(r);
    for (const auto& i : lattice.proper()) {
      ++result.ideals_searched;
      std::map<std::string, std::optional<Check>> cache;
      auto flag = [&](const std::string& name) {
        auto it = cache.find(name);
        if (it == cache.end()) it = cache.emplace(name, evaluate_flag(i, name)).first;
        return it->second.has_value() && it->second->holds;
      };
      if (!expr.eval(flag)) continue;

      result.found = true;
      result.ring = r->spec();
      result.ideal = i;
      for (const auto& name : expr.flags()) {
        if (!cache.count(name)) cache.emplace(name, evaluate_flag(i, name));
        const auto& c = cache.at(name);
        result.flags[name] =
            c ? std::optional<bool>(c->holds) : std::optional<bool>();
        if (c && c->witness) result.witnesses.emplace(name, *c->witness);
      }

      // Replay from scratch: rebuild the ideal from its generators.
      const auto rebuilt = ideal_from_generators(
          parse_ring_spec(result.ring),
          {i.generators().begin(), i.generators().end()});
      bool ok = expr.eval([&](const std::string& name) {
        const auto c = evaluate_flag(rebuilt, name);
        return c.has_value() && c->holds;
      });
      for (const auto& [name, w] : result.witnesses) {
        const auto desc = flag_phi(name);
        const auto phi = desc ? eval_phi(*desc, rebuilt)
                              : PhiValue::empty_marker(rebuilt.ring());
        ok = ok && replay(rebuilt, phi, w);
      }
      result.verified = ok;
      return result;
    }
  }
  return result;
}

}  // namespace absorb
