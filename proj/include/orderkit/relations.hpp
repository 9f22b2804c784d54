#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "orderkit/lattice.hpp"
#include "orderkit/poset.hpp"

namespace orderkit {

/// How an auxiliary relation is computed. `oracle` quantifies literally over
/// the sets in its definition (exponential, capped); `fast` uses the closed
/// form that holds on finite carriers.
enum class Mode { oracle, fast };

/// A binary relation over a carrier of n elements; row x is {y | x R y}.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : rows_(n, Subset(n)) {}
  static Relation of_order(const FinitePoset& p);

  std::size_t size() const { return rows_.size(); }
  bool contains(Element x, Element y) const { return rows_[x].contains(y); }
  void set(Element x, Element y, bool value) {
    if (value)
      rows_[x].insert(y);
    else
      rows_[x].erase(y);
  }
  const Subset& row(Element x) const { return rows_[x]; }
  Subset column(Element y) const;
  std::vector<std::pair<Element, Element>> pairs() const;
  bool is_subset_of(const Relation& other) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<Subset> rows_;
};

/// x << y iff every directed D whose sup exists and is >= y meets up(x).
Relation way_below(const FinitePoset& p, Mode mode = Mode::fast);

/// {p | p << x}.
Subset approximants(const FinitePoset& p, Element x, Mode mode = Mode::fast);

/// F << G: every directed D with an existing sup in up(G) meets up(F).
/// F and G must be nonempty (OrderError otherwise).
bool way_below_sets(const FinitePoset& p, const Subset& f, const Subset& g);

/// The up-sets up(F), F a nonempty subset with F << {x}.
struct FinFamily {
  /// Every distinct member, shortlex order.
  std::vector<Subset> members;
  /// The inclusion-minimal members, shortlex order.
  std::vector<Subset> minimal;
};
FinFamily fin_family(const FinitePoset& p, Element x);

/// u <| v iff every S with sup(S) >= v has u in down(S). The closed form uses
/// the worst case S = L \ up(u): u <| v iff not v <= sup(L \ up(u)).
Relation way_way_below(const FiniteLattice& l, Mode mode = Mode::fast);

/// x < y in the hypercontinuity sense. The oracle tests every upper set V:
/// V within up(y) must imply V within up(x). Fast mode returns the order.
Relation prec(const FiniteLattice& l, Mode mode = Mode::fast);

}  // namespace orderkit
