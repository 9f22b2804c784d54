#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orderkit/poset.hpp"
#include "orderkit/verdict.hpp"
#include "orderkit/verifier.hpp"

namespace orderkit {

/// Result of checking named predicates on one poset. A missing verdict
/// means the predicate was skipped (it needs a lattice).
struct CheckReport {
  std::string name;
  std::size_t n = 0;
  std::vector<std::pair<std::string, std::optional<Verdict>>> results;

  bool all_hold() const;
};

CheckReport check_properties(const FinitePoset& p, const std::vector<std::string>& names, Mode mode = Mode::fast);

/// {"name", "n", "properties": {p: true|false|"skipped"},
///  "witnesses": {p: {"elements", "subsets", "lhs", "rhs"}}}
nlohmann::json to_json(const CheckReport& report, bool with_witnesses);
std::string to_text(const CheckReport& report, bool with_witnesses);

nlohmann::json witness_json(const Witness& w);
nlohmann::json to_json(const SuiteReport& report);

/// Report of one verify invocation, in the check-report shape with the suite
/// details under "suite".
nlohmann::json verify_json(const std::vector<SuiteReport>& reports, std::size_t max_n);
std::string verify_text(const std::vector<SuiteReport>& reports);

}  // namespace orderkit
