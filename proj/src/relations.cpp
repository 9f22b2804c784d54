#include "orderkit/relations.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "orderkit/errors.hpp"
#include "orderkit/limits.hpp"

namespace orderkit {

Relation Relation::of_order(const FinitePoset& p) {
  Relation r(p.size());
  for (Element x = 0; x < p.size(); ++x) r.rows_[x] = p.up(x);
  return r;
}

Subset Relation::column(Element y) const {
  Subset c(size());
  for (Element x = 0; x < size(); ++x)
    if (contains(x, y)) c.insert(x);
  return c;
}

std::vector<std::pair<Element, Element>> Relation::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < size(); ++x) rows_[x].for_each([&](Element y) { out.emplace_back(x, y); });
  return out;
}

bool Relation::is_subset_of(const Relation& other) const {
  for (Element x = 0; x < size(); ++x)
    if (!rows_[x].is_subset_of(other.rows_[x])) return false;
  return true;
}

namespace {

// F << G over precomputed directed sets, with up(F) and up(G) as masks.
bool sets_way_below(const std::vector<DirectedSet>& directed, std::uint64_t up_f, std::uint64_t up_g) {
  for (const auto& d : directed) {
    if (!d.sup) continue;
    if (((up_g >> *d.sup) & 1U) && !(d.members & up_f)) return false;
  }
  return true;
}

std::uint64_t up_mask_of(const std::vector<std::uint64_t>& up, std::uint64_t s) {
  std::uint64_t out = 0;
  for (; s; s &= s - 1) out |= up[std::countr_zero(s)];
  return out;
}

}  // namespace

Relation way_below(const FinitePoset& p, Mode mode) {
  const std::size_t n = p.size();
  if (mode == Mode::fast) return Relation::of_order(p);

  const auto directed = directed_subsets(p);
  const auto up = p.up_masks();
  const auto down = p.down_masks();
  // misses[y]: the x for which some directed D with sup >= y avoids up(x).
  std::vector<std::uint64_t> misses(n, 0);
  for (const auto& d : directed) {
    if (!d.sup) continue;
    std::uint64_t avoiding = 0;
    for (Element x = 0; x < n; ++x)
      if (!(up[x] & d.members)) avoiding |= std::uint64_t{1} << x;
    for (std::uint64_t ys = down[*d.sup]; ys; ys &= ys - 1) misses[std::countr_zero(ys)] |= avoiding;
  }
  Relation r(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) r.set(x, y, !((misses[y] >> x) & 1U));
  return r;
}

Subset approximants(const FinitePoset& p, Element x, Mode mode) { return way_below(p, mode).column(x); }

bool way_below_sets(const FinitePoset& p, const Subset& f, const Subset& g) {
  if (f.empty() || g.empty()) throw OrderError("way_below_sets requires nonempty sets");
  const auto directed = directed_subsets(p);
  const auto up = p.up_masks();
  return sets_way_below(directed, up_mask_of(up, f.mask()), up_mask_of(up, g.mask()));
}

FinFamily fin_family(const FinitePoset& p, Element x) {
  const std::size_t n = p.size();
  const auto directed = directed_subsets(p);
  const auto up = p.up_masks();
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> members;
  for_each_mask_shortlex(n, [&](std::uint64_t f) {
    if (!f) return true;
    const std::uint64_t up_f = up_mask_of(up, f);
    if (!seen.insert(up_f).second) return true;
    if (sets_way_below(directed, up_f, up[x])) members.push_back(up_f);
    return true;
  });
  std::sort(members.begin(), members.end(), [](auto a, auto b) { return shortlex_less(a, b); });

  FinFamily fam;
  for (auto m : members) {
    fam.members.push_back(Subset::from_mask(n, m));
    const bool minimal = std::none_of(members.begin(), members.end(),
                                      [&](std::uint64_t o) { return o != m && (o & ~m) == 0; });
    if (minimal) fam.minimal.push_back(Subset::from_mask(n, m));
  }
  return fam;
}

Relation way_way_below(const FiniteLattice& l, Mode mode) {
  const std::size_t n = l.size();
  const FinitePoset& p = l.poset();
  Relation r(n);
  if (mode == Mode::fast) {
    for (Element u = 0; u < n; ++u) {
      const Element worst = l.sup(~p.up(u));
      for (Element v = 0; v < n; ++v) r.set(u, v, !l.leq(v, worst));
    }
    return r;
  }

  require_subset_cap(n, "way-way-below oracle (elements)");
  const auto down = p.down_masks();
  // outside[v]: union over all S with sup(S) >= v of the complement of down(S).
  std::vector<std::uint64_t> outside(n, 0);
  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  for (std::uint64_t s = 0; s <= all; ++s) {
    const Element top_of_s = l.sup_mask(s);
    std::uint64_t down_s = 0;
    for (std::uint64_t m = s; m; m &= m - 1) down_s |= down[std::countr_zero(m)];
    const std::uint64_t missing = all & ~down_s;
    for (std::uint64_t vs = down[top_of_s]; vs; vs &= vs - 1) outside[std::countr_zero(vs)] |= missing;
    if (s == all) break;
  }
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v) r.set(u, v, !((outside[v] >> u) & 1U));
  return r;
}

Relation prec(const FiniteLattice& l, Mode mode) {
  const FinitePoset& p = l.poset();
  if (mode == Mode::fast) return Relation::of_order(p);

  const std::size_t n = l.size();
  Relation r(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) r.set(x, y, true);

  const std::size_t limit = limits().upper_set_limit;
  if (count_upper_sets(p, limit) > limit) throw SizeLimit("hypercontinuity oracle (upper sets)", limit, limit, false);
  for_each_upper_set(p, [&](const Subset& v) {
    for (Element y = 0; y < n; ++y) {
      if (!v.is_subset_of(p.up(y))) continue;
      for (Element x = 0; x < n; ++x)
        if (r.contains(x, y) && !v.is_subset_of(p.up(x))) r.set(x, y, false);
    }
    return true;
  });
  return r;
}

}  // namespace orderkit
