#ifndef ABSORB_SEARCH_HPP_
#define ABSORB_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absorb/classify.hpp"

namespace absorb {

/// Flag names usable in predicate expressions, besides n_almost_<m>.
const std::vector<std::string>& flag_names();

/// Canonical name for a flag, resolving aliases (one_absorbing ->
/// one_absorbing_prime). Raises ParseError for unknown names and
/// InvalidExponent for n_almost_<m> with m < 2.
std::string canonical_flag(std::string_view name);

/// Evaluates one flag. nullopt when the predicate is undefined for the
/// ideal (two_absorbing on the zero ideal).
std::optional<Check> evaluate_flag(const Ideal& i, const std::string& flag);

/// The φ a flag's witness is checked against; nullopt for the
/// 2-absorbing flags, which do not involve φ.
std::optional<PhiDescriptor> flag_phi(const std::string& flag);

/// Boolean expression over flag names:
///   expr := term (('|' | '||' | '∨') term)*
///   term := factor (('&' | '&&' | '∧') factor)*
///   factor := ('!' | '¬') factor | '(' expr ')' | flag
class PredicateExpr {
 public:
  static PredicateExpr parse(std::string_view text);

  /// `flag` receives canonical names; undefined flags count as false.
  bool eval(const std::function<bool(const std::string&)>& flag) const;
  /// Canonical flag names in first-use order.
  const std::vector<std::string>& flags() const noexcept { return flags_; }
  std::string to_string() const;

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::vector<std::string> flags_;
};

struct SearchOptions {
  unsigned zn_max = 60;
  bool include_products = true;
};

struct SearchResult {
  bool found = false;
  std::string ring;
  std::optional<Ideal> ideal;
  /// Value of every flag in the expression (nullopt = undefined).
  std::map<std::string, std::optional<bool>> flags;
  std::map<std::string, Witness> witnesses;
  /// Re-evaluation from scratch agreed and every witness replayed.
  bool verified = false;
  std::uint64_t rings_searched = 0;
  std::uint64_t ideals_searched = 0;
};

/// Zn:2..zn_max plus the product rings of the default corpus, ordered by
/// (ring order, spec).
std::vector<std::string> search_space(const SearchOptions& options);

/// Smallest instance by (ring order, spec), then canonical ideal order.
SearchResult search(const PredicateExpr& expr, const SearchOptions& options);

}  // namespace absorb

#endif  // ABSORB_SEARCH_HPP_
