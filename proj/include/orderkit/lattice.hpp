#pragma once

#include <cstddef>
#include <vector>

#include "orderkit/poset.hpp"

namespace orderkit {

/// A finite lattice with tabulated binary join and meet. Every finite
/// lattice is complete: sup/inf of any subset fold the binary operations,
/// with sup(empty) = bottom and inf(empty) = top.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  const FinitePoset& poset() const { return base_; }
  std::size_t size() const { return base_.size(); }
  const std::string& name() const { return base_.name(); }
  const std::string& label(Element i) const { return base_.label(i); }
  bool leq(Element a, Element b) const { return base_.leq(a, b); }

  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  Element sup(const Subset& s) const;
  Element inf(const Subset& s) const;
  Element sup_mask(std::uint64_t s) const;
  Element inf_mask(std::uint64_t s) const;

  /// Order dual: join and meet, top and bottom exchanged.
  FiniteLattice dual() const;

  /// Trusted construction from tables already known to be the lattice
  /// operations of `base` (used by constructions such as open-set lattices).
  static FiniteLattice from_tables(FinitePoset base, std::vector<Element> join, std::vector<Element> meet,
                                   Element bottom, Element top);

 private:
  friend FiniteLattice as_lattice(const FinitePoset& p);
  FinitePoset base_;
  std::vector<Element> join_, meet_;
  Element bottom_ = 0, top_ = 0;
};

/// Tabulates binary joins and meets. Throws NotALattice with the first pair
/// (in index order) missing a join or meet, or for an empty carrier.
FiniteLattice as_lattice(const FinitePoset& p);

/// Lattice test without the exception.
bool is_lattice(const FinitePoset& p);

}  // namespace orderkit
