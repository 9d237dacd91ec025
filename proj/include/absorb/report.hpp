#ifndef ABSORB_REPORT_HPP_
#define ABSORB_REPORT_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "absorb/classify.hpp"
#include "absorb/search.hpp"
#include "absorb/theorems.hpp"

namespace absorb {

inline constexpr const char* kVersion = "1.0.0";

/// Flag key of a per-φ flag, e.g. "phi_one_absorbing[zero]".
std::string phi_flag_key(const std::string& family, const std::string& phi);

/// {gens, elements, text, flags:{name: bool|null}, witnesses:{name:
/// {kind, elements, text}}}. Keys are sorted, so output is canonical.
nlohmann::json classification_json(const Classification& c);

nlohmann::json verdict_json(const TheoremVerdict& v);

/// {version, ring, order, phis, ideals:[...], verdicts:[]}
nlohmann::json classify_report(const RingHandle& r,
                               const std::vector<Classification>& rows,
                               const std::vector<std::string>& phis);

/// One row per ideal: ring, gens, size, then every flag column and a
/// witness column per flag (elements separated by spaces).
std::string classify_csv(const RingHandle& r,
                         const std::vector<Classification>& rows);

/// {version, ring:[specs], ideals:[], verdicts:[...], summary:{status: n}}
nlohmann::json verify_report(const std::vector<std::string>& specs,
                             const std::vector<TheoremVerdict>& verdicts);

std::string verdicts_csv(const std::vector<TheoremVerdict>& verdicts);

/// {version, query, found, ring, ideals:[row], searched:{rings, ideals},
/// verified, verdicts:[]}
nlohmann::json search_report(const std::string& query,
                             const SearchResult& result);

}  // namespace absorb

#endif  // ABSORB_REPORT_HPP_
