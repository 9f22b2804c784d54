#pragma once

#include <cstddef>
#include <vector>

#include "orderkit/lattice.hpp"
#include "orderkit/poset.hpp"
#include "orderkit/relations.hpp"

namespace orderkit {

/// A lattice of subsets of `base`, ordered by inclusion. Element i of
/// `lattice` is `sets[i]`; sets are sorted shortlex, so the empty set (when
/// present) is element 0 and the full carrier is the last element.
struct SetLattice {
  FinitePoset base;
  std::vector<Subset> sets;
  FiniteLattice lattice;
};

/// Upper, and (definitional mode) every directed set with an existing sup in
/// `u` meets `u`. Fast mode checks only the upper-set condition.
bool is_scott_open(const FinitePoset& p, const Subset& u, Mode mode = Mode::fast);

/// Smallest Scott-closed superset of `s`. The oracle mode closes down(s)
/// under sups of its directed subsets until stable; fast mode is down(s).
Subset scott_closure(const FinitePoset& p, const Subset& s, Mode mode = Mode::fast);

/// The Scott-open sets of `p` with union and intersection. Throws SizeLimit
/// if there are more than `limit` of them.
SetLattice scott_opens(const FinitePoset& p, std::size_t limit = std::size_t{1} << 20);

/// The Scott-closed sets (complements of the opens) ordered by inclusion.
SetLattice scott_closed_lattice(const FinitePoset& p, std::size_t limit = std::size_t{1} << 20);

/// True iff complementation maps the opens bijectively onto the closed sets
/// and reverses inclusion, i.e. it is an isomorphism dual(opens) -> closed.
bool complement_is_dual_isomorphism(const SetLattice& opens, const SetLattice& closed);

/// "{a,b}" style label for a subset of `p`.
std::string set_label(const FinitePoset& p, const Subset& s);

}  // namespace orderkit
