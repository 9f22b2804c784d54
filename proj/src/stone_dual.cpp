#include "orderkit/stone_dual.hpp"

#include <algorithm>
#include <unordered_map>

#include "orderkit/errors.hpp"

namespace orderkit {

bool is_scott_open(const FinitePoset& p, const Subset& u, Mode mode) {
  if (!is_upper(p, u)) return false;
  if (mode == Mode::fast) return true;
  for (const auto& d : directed_subsets(p)) {
    if (d.sup && u.contains(*d.sup) && !(d.members & u.mask())) return false;
  }
  return true;
}

Subset scott_closure(const FinitePoset& p, const Subset& s, Mode mode) {
  Subset closed = down_closure(p, s);
  if (mode == Mode::fast) return closed;
  const auto directed = directed_subsets(p);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::uint64_t c = closed.mask();
    for (const auto& d : directed) {
      if (d.sup && (d.members & ~c) == 0 && !closed.contains(*d.sup)) {
        closed |= p.down(*d.sup);
        grew = true;
      }
    }
  }
  return closed;
}

std::string set_label(const FinitePoset& p, const Subset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element i) {
    if (!first) out += ',';
    out += p.label(i);
    first = false;
  });
  return out + "}";
}

namespace {

SetLattice inclusion_lattice(const FinitePoset& base, std::vector<Subset> sets, const std::string& name) {
  std::sort(sets.begin(), sets.end(), [](const Subset& a, const Subset& b) { return shortlex_less(a, b); });
  const std::size_t m = sets.size();
  std::unordered_map<Subset, Element> index;
  index.reserve(m);
  for (Element i = 0; i < m; ++i) index.emplace(sets[i], i);

  std::vector<std::string> labels(m);
  std::vector<Subset> up(m, Subset(m));
  std::vector<Element> join(m * m), meet(m * m);
  for (Element i = 0; i < m; ++i) {
    labels[i] = set_label(base, sets[i]);
    for (Element j = 0; j < m; ++j) {
      if (sets[i].is_subset_of(sets[j])) up[i].insert(j);
      join[i * m + j] = index.at(sets[i] | sets[j]);
      meet[i * m + j] = index.at(sets[i] & sets[j]);
    }
  }
  FinitePoset order(name, std::move(labels), std::move(up));
  FiniteLattice lattice = FiniteLattice::from_tables(std::move(order), std::move(join), std::move(meet), 0, m - 1);
  return SetLattice{base, std::move(sets), std::move(lattice)};
}

}  // namespace

SetLattice scott_opens(const FinitePoset& p, std::size_t limit) {
  const std::size_t count = count_upper_sets(p, limit);
  if (count > limit) throw SizeLimit("Scott-open sets of '" + p.name() + "'", limit, limit, false);
  return inclusion_lattice(p, upper_sets(p, limit), "sigma(" + p.name() + ")");
}

SetLattice scott_closed_lattice(const FinitePoset& p, std::size_t limit) {
  const std::size_t count = count_upper_sets(p, limit);
  if (count > limit) throw SizeLimit("Scott-closed sets of '" + p.name() + "'", limit, limit, false);
  std::vector<Subset> closed;
  for (const auto& u : upper_sets(p, limit)) closed.push_back(~u);
  return inclusion_lattice(p, std::move(closed), "gamma(" + p.name() + ")");
}

bool complement_is_dual_isomorphism(const SetLattice& opens, const SetLattice& closed) {
  const std::size_t m = opens.sets.size();
  if (closed.sets.size() != m) return false;
  std::unordered_map<Subset, Element> closed_index;
  for (Element i = 0; i < m; ++i) closed_index.emplace(closed.sets[i], i);
  std::vector<Element> image(m);
  std::vector<bool> hit(m, false);
  for (Element i = 0; i < m; ++i) {
    auto it = closed_index.find(~opens.sets[i]);
    if (it == closed_index.end() || hit[it->second]) return false;
    image[i] = it->second;
    hit[it->second] = true;
  }
  for (Element i = 0; i < m; ++i)
    for (Element j = 0; j < m; ++j)
      if (opens.lattice.leq(i, j) != closed.lattice.leq(image[j], image[i])) return false;
  return true;
}

}  // namespace orderkit
