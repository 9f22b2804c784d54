#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orderkit/subset.hpp"

namespace orderkit {

using Element = std::size_t;

/// A finite partially ordered set. Element i is identified by its index; the
/// labels are only for input and output. Immutable once constructed.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Takes the principal up-sets (`up[i]` = {j | i <= j}) and validates
  /// reflexivity, antisymmetry, transitivity and label uniqueness.
  /// Throws CycleError on an antisymmetry violation, OrderError otherwise.
  FinitePoset(std::string name, std::vector<std::string> labels, std::vector<Subset> up);

  std::size_t size() const { return labels_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element i) const { return labels_[i]; }
  std::optional<Element> find(std::string_view label) const;
  /// Like find() but throws UnknownLabel.
  Element index_of(std::string_view label) const;

  bool leq(Element a, Element b) const { return up_[a].contains(b); }
  bool lt(Element a, Element b) const { return a != b && leq(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }

  const Subset& up(Element i) const { return up_[i]; }
  const Subset& down(Element i) const { return down_[i]; }

  Subset empty_subset() const { return Subset(size()); }
  Subset full_subset() const { return Subset::full(size()); }
  /// Subset from labels; throws UnknownLabel.
  Subset subset(std::initializer_list<std::string_view> labels) const;
  std::vector<std::string> labels_of(const Subset& s) const;

  /// Masks of up/down sets; requires size() <= 64.
  std::vector<std::uint64_t> up_masks() const;
  std::vector<std::uint64_t> down_masks() const;

  FinitePoset renamed(std::string name) const;

  /// Same labels and the same order; the name is ignored.
  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
};

enum class PairMode { covers, relation };

/// Builds the reflexive-transitive closure of `pairs` (x, y) meaning x <= y.
/// In covers mode a pair (x, x) is rejected; in relation mode it is allowed.
/// Throws UnknownLabel, CycleError, OrderError (duplicate labels).
FinitePoset build_poset(std::string name, std::vector<std::string> labels,
                        const std::vector<std::pair<std::string, std::string>>& pairs,
                        PairMode mode = PairMode::covers);

Subset up_closure(const FinitePoset& p, const Subset& s);
Subset down_closure(const FinitePoset& p, const Subset& s);
bool is_upper(const FinitePoset& p, const Subset& s);
bool is_lower(const FinitePoset& p, const Subset& s);

/// Nonempty and every pair of members has an upper bound inside the subset.
bool is_directed(const FinitePoset& p, const Subset& s);

Subset upper_bounds(const FinitePoset& p, const Subset& s);
Subset lower_bounds(const FinitePoset& p, const Subset& s);
/// Least upper bound of `s`, if any. sup of the empty set is the least
/// element of `p` when it exists.
std::optional<Element> sup(const FinitePoset& p, const Subset& s);
std::optional<Element> inf(const FinitePoset& p, const Subset& s);
std::optional<Element> least(const FinitePoset& p, const Subset& s);
std::optional<Element> greatest(const FinitePoset& p, const Subset& s);

/// Cover pairs (x, y), x < y with nothing strictly between, in index order.
std::vector<std::pair<Element, Element>> hasse(const FinitePoset& p);

/// Transposed order, same labels.
FinitePoset dual(const FinitePoset& p);

/// Same order with elements reordered: element k of the result is element
/// order[k] of `p`. Labels travel with their elements.
FinitePoset permute(const FinitePoset& p, const std::vector<Element>& order);

/// Element indices sorted so that x < y implies x comes first.
std::vector<Element> linear_extension(const FinitePoset& p);

/// Enumerates every upper set of `p` by choose/exclude backtracking in a
/// linear extension. `visit` returns false to stop early. Returns the number of
/// upper sets visited.
std::size_t for_each_upper_set(const FinitePoset& p, const std::function<bool(const Subset&)>& visit);

/// All upper sets sorted by shortlex. Throws SizeLimit when there are more
/// than `limit`, before materializing them.
std::vector<Subset> upper_sets(const FinitePoset& p, std::size_t limit);
std::vector<Subset> lower_sets(const FinitePoset& p, std::size_t limit);

/// Counts upper sets, stopping once the count passes `stop_after`.
std::size_t count_upper_sets(const FinitePoset& p, std::size_t stop_after);

/// A directed subset (as a mask) together with its supremum, if it exists.
struct DirectedSet {
  std::uint64_t members = 0;
  std::optional<Element> sup;
};

/// Every directed subset of `p`, found by testing each of the 2^n nonempty
/// subsets against the definition, in shortlex order. Throws SizeLimit when
/// p.size() exceeds limits().subset_max_n.
std::vector<DirectedSet> directed_subsets(const FinitePoset& p);

/// Throws SizeLimit if `n` exceeds limits().subset_max_n.
void require_subset_cap(std::size_t n, const char* what);

/// Labels for generated carriers: a, b, ..., z, then x26, x27, ...
std::string letter_label(std::size_t i);

}  // namespace orderkit
