#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orderkit {

/// The offending data behind a failed check, expressed in element labels.
struct Witness {
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> subsets;
  std::optional<std::string> lhs;
  std::optional<std::string> rhs;
  std::string detail;
};

/// Outcome of a predicate or theorem check.
struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  /// Predicate values gathered by composite checks, keyed by predicate name.
  std::map<std::string, bool> profile;

  explicit operator bool() const { return holds; }

  static Verdict pass() { return {}; }
  static Verdict fail(Witness w) {
    Verdict v;
    v.holds = false;
    v.witness = std::move(w);
    return v;
  }
};

}  // namespace orderkit
