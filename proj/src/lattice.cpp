#include "orderkit/lattice.hpp"

#include <bit>

#include "orderkit/errors.hpp"

namespace orderkit {

Element FiniteLattice::sup(const Subset& s) const {
  Element acc = bottom_;
  s.for_each([&](Element i) { acc = join(acc, i); });
  return acc;
}

Element FiniteLattice::inf(const Subset& s) const {
  Element acc = top_;
  s.for_each([&](Element i) { acc = meet(acc, i); });
  return acc;
}

Element FiniteLattice::sup_mask(std::uint64_t s) const {
  Element acc = bottom_;
  for (; s; s &= s - 1) acc = join(acc, static_cast<Element>(std::countr_zero(s)));
  return acc;
}

Element FiniteLattice::inf_mask(std::uint64_t s) const {
  Element acc = top_;
  for (; s; s &= s - 1) acc = meet(acc, static_cast<Element>(std::countr_zero(s)));
  return acc;
}

FiniteLattice FiniteLattice::dual() const {
  return from_tables(orderkit::dual(base_), meet_, join_, top_, bottom_);
}

FiniteLattice FiniteLattice::from_tables(FinitePoset base, std::vector<Element> join, std::vector<Element> meet,
                                         Element bottom, Element top) {
  FiniteLattice l;
  l.base_ = std::move(base);
  l.join_ = std::move(join);
  l.meet_ = std::move(meet);
  l.bottom_ = bottom;
  l.top_ = top;
  return l;
}

FiniteLattice as_lattice(const FinitePoset& p) {
  const std::size_t n = p.size();
  if (n == 0) throw NotALattice();
  FiniteLattice l;
  l.base_ = p;
  l.join_.assign(n * n, 0);
  l.meet_.assign(n * n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      const Subset pair = Subset::of(n, {a, b});
      auto j = orderkit::sup(p, pair);
      if (!j) throw NotALattice(p.label(a), p.label(b), "join");
      auto m = orderkit::inf(p, pair);
      if (!m) throw NotALattice(p.label(a), p.label(b), "meet");
      l.join_[a * n + b] = l.join_[b * n + a] = *j;
      l.meet_[a * n + b] = l.meet_[b * n + a] = *m;
    }
  }
  // A finite carrier whose pairs all have joins and meets has both bounds.
  l.top_ = *orderkit::sup(p, p.full_subset());
  l.bottom_ = *orderkit::inf(p, p.full_subset());
  return l;
}

bool is_lattice(const FinitePoset& p) {
  try {
    (void)as_lattice(p);
    return true;
  } catch (const NotALattice&) {
    return false;
  }
}

}  // namespace orderkit
