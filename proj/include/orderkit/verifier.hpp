#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orderkit/generators.hpp"
#include "orderkit/lattice.hpp"
#include "orderkit/poset.hpp"
#include "orderkit/relations.hpp"
#include "orderkit/verdict.hpp"

namespace orderkit {

// ---------------------------------------------------------------------------
// Named predicates

/// Predicate names accepted by evaluate_property and predicate expressions,
/// in report order.
const std::vector<std::string>& property_names();
bool is_lattice_property(std::string_view name);

/// Evaluates a named predicate. Returns nullopt when the predicate needs a
/// lattice and `p` is not one. Throws OrderError for an unknown name.
std::optional<Verdict> evaluate_property(std::string_view name, const FinitePoset& p, Mode mode = Mode::fast);

/// Boolean combination of predicate names with ! & | and parentheses.
/// `!` binds tightest, then `&`, then `|`. "poset" is always true and
/// "lattice" tests for a lattice; lattice-only predicates are false on
/// non-lattices.
class PredicateExpr {
 public:
  /// Throws ParseError.
  static PredicateExpr parse(std::string_view text);
  bool evaluate(const FinitePoset& p, Mode mode = Mode::fast) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

// ---------------------------------------------------------------------------
// Per-instance checks

/// For every M: inf(L \ down M) = join over m in M of inf(L \ down m), and
/// the set identity L \ down M = intersection of the L \ down m. Profile keys:
/// "equation", "set_identity". Holds iff both do.
Verdict lemma31_check(const FiniteLattice& l);

/// (join continuous and hypercontinuous) iff prime continuous.
Verdict thm32_check(const FiniteLattice& l, Mode mode = Mode::oracle);

/// (meet continuous and quasicontinuous) iff continuous.
Verdict thm34_check(const FinitePoset& p, Mode mode = Mode::oracle);

/// continuous(P) iff prime continuous(opens(P)). Also records in the
/// profile, and requires, that the open-set lattice is prime continuous and
/// that the closed-set lattice is isomorphic to its order dual.
Verdict thm21_check(const FinitePoset& p, Mode mode = Mode::oracle);

/// meet continuous(P) iff join continuous(opens(P)) iff frame(closed(P)).
Verdict thm23_check(const FinitePoset& p, Mode mode = Mode::oracle);

/// quasicontinuous(P) iff hypercontinuous(opens(P)).
Verdict thm25_check(const FinitePoset& p, Mode mode = Mode::oracle);

/// prime => join continuous, prime => frame, prime => hypercontinuous,
/// hypercontinuous => continuous.
Verdict chain_check(const FiniteLattice& l, Mode mode = Mode::oracle);

/// Each of continuity, hypercontinuity and prime continuity agrees with its
/// sup-inf form x = rhs(x) for all x.
Verdict characterization_check(const FiniteLattice& l, Mode mode = Mode::oracle);

// ---------------------------------------------------------------------------
// Suites

enum class Suite { lemma31, thm32, thm34, thm21, thm23, thm25, chains, characterizations, full };

std::optional<Suite> parse_suite(std::string_view name);
std::string suite_name(Suite s);

struct Universe {
  std::size_t min_n = 1;
  std::size_t max_n = 1;
};

struct SuiteOptions {
  Mode mode = Mode::oracle;
  std::size_t jobs = 1;
  /// Skip timing so reports are byte-identical across runs.
  bool deterministic = false;
};

struct InstanceResult {
  /// Canonically ordered instance (numeric labels, see enumerate_posets).
  FinitePoset instance;
  /// Named structure the instance is isomorphic to, if any.
  std::optional<std::string> alias;
  Verdict verdict;
};

struct SuiteReport {
  std::string suite;
  std::string universe;
  std::size_t instances = 0;
  /// Instances violating the checked statement.
  std::vector<InstanceResult> failures;
  /// Instances outside the statement's hypothesis where its conclusion
  /// fails anyway (recorded, not counted as failures).
  std::vector<InstanceResult> observations;
  /// Instances skipped because an enumeration cap was hit.
  std::vector<std::string> limited;
  /// Conjuncts that are always true on finite carriers.
  std::vector<std::string> trivialized;
  std::string note;
  std::optional<double> wall_seconds;

  bool passed() const { return failures.empty(); }
};

/// Runs one suite over every instance of its kind (lattices for lemma31,
/// thm32, chains, characterizations; posets otherwise) with n in range.
/// Suite::full is not accepted here; see run_suites.
SuiteReport run_suite(Suite suite, const Universe& universe, const SuiteOptions& options = {});

/// Like run_suite; Suite::full expands to every suite in declaration order.
std::vector<SuiteReport> run_suites(Suite suite, const Universe& universe, const SuiteOptions& options = {});

/// First instance (by n, then canonical order) satisfying `expr`, among
/// posets or lattices with n in range.
std::optional<FinitePoset> search(const Universe& universe, UniverseKind kind, const PredicateExpr& expr,
                                  Mode mode = Mode::fast);

}  // namespace orderkit
