#include "orderkit/poset.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "orderkit/errors.hpp"
#include "orderkit/limits.hpp"

namespace orderkit {

FinitePoset::FinitePoset(std::string name, std::vector<std::string> labels, std::vector<Subset> up)
    : name_(std::move(name)), labels_(std::move(labels)), up_(std::move(up)) {
  const std::size_t n = labels_.size();
  if (up_.size() != n) throw OrderError("relation has " + std::to_string(up_.size()) + " rows for " +
                                        std::to_string(n) + " labels");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw OrderError("empty element label");
    if (!seen.insert(l).second) throw OrderError("duplicate element label '" + l + "'");
  }
  for (Element i = 0; i < n; ++i) {
    if (up_[i].universe() != n) throw OrderError("relation row has the wrong width");
    if (!up_[i].contains(i)) throw OrderError("relation is not reflexive at '" + labels_[i] + "'");
  }
  for (Element i = 0; i < n; ++i) {
    up_[i].for_each([&](Element j) {
      if (j != i && up_[j].contains(i)) throw CycleError(labels_[i], labels_[j]);
      if (!up_[j].is_subset_of(up_[i]))
        throw OrderError("relation is not transitive through '" + labels_[j] + "'");
    });
  }
  down_.assign(n, Subset(n));
  for (Element i = 0; i < n; ++i) up_[i].for_each([&](Element j) { down_[j].insert(i); });
}

std::optional<Element> FinitePoset::find(std::string_view label) const {
  for (Element i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Element FinitePoset::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw UnknownLabel(std::string(label));
}

Subset FinitePoset::subset(std::initializer_list<std::string_view> labels) const {
  Subset s(size());
  for (auto l : labels) s.insert(index_of(l));
  return s;
}

std::vector<std::string> FinitePoset::labels_of(const Subset& s) const {
  std::vector<std::string> out;
  s.for_each([&](Element i) { out.push_back(labels_[i]); });
  return out;
}

std::vector<std::uint64_t> FinitePoset::up_masks() const {
  assert(size() <= 64);
  std::vector<std::uint64_t> m(size());
  for (Element i = 0; i < size(); ++i) m[i] = up_[i].mask();
  return m;
}

std::vector<std::uint64_t> FinitePoset::down_masks() const {
  assert(size() <= 64);
  std::vector<std::uint64_t> m(size());
  for (Element i = 0; i < size(); ++i) m[i] = down_[i].mask();
  return m;
}

FinitePoset FinitePoset::renamed(std::string name) const {
  FinitePoset p = *this;
  p.name_ = std::move(name);
  return p;
}

FinitePoset build_poset(std::string name, std::vector<std::string> labels,
                        const std::vector<std::pair<std::string, std::string>>& pairs, PairMode mode) {
  const std::size_t n = labels.size();
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < n; ++i)
    if (!index.emplace(labels[i], i).second) throw OrderError("duplicate element label '" + labels[i] + "'");

  std::vector<Subset> up(n, Subset(n));
  for (Element i = 0; i < n; ++i) up[i].insert(i);
  for (const auto& [lo, hi] : pairs) {
    auto a = index.find(lo);
    if (a == index.end()) throw UnknownLabel(lo);
    auto b = index.find(hi);
    if (b == index.end()) throw UnknownLabel(hi);
    if (a->second == b->second && mode == PairMode::covers)
      throw OrderError("cover pair '" + lo + "' '" + hi + "' is reflexive");
    up[a->second].insert(b->second);
  }
  // Warshall closure over up-set rows.
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if (up[i].contains(k)) up[i] |= up[k];
  return FinitePoset(std::move(name), std::move(labels), std::move(up));
}

Subset up_closure(const FinitePoset& p, const Subset& s) {
  Subset out(p.size());
  s.for_each([&](Element i) { out |= p.up(i); });
  return out;
}

Subset down_closure(const FinitePoset& p, const Subset& s) {
  Subset out(p.size());
  s.for_each([&](Element i) { out |= p.down(i); });
  return out;
}

bool is_upper(const FinitePoset& p, const Subset& s) { return up_closure(p, s) == s; }
bool is_lower(const FinitePoset& p, const Subset& s) { return down_closure(p, s) == s; }

bool is_directed(const FinitePoset& p, const Subset& s) {
  if (s.empty()) return false;
  const auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!(p.up(m[i]) & p.up(m[j])).intersects(s)) return false;
  return true;
}

Subset upper_bounds(const FinitePoset& p, const Subset& s) {
  Subset ub = p.full_subset();
  s.for_each([&](Element i) { ub &= p.up(i); });
  return ub;
}

Subset lower_bounds(const FinitePoset& p, const Subset& s) {
  Subset lb = p.full_subset();
  s.for_each([&](Element i) { lb &= p.down(i); });
  return lb;
}

std::optional<Element> least(const FinitePoset& p, const Subset& s) {
  std::optional<Element> found;
  s.for_each([&](Element i) {
    if (!found && s.is_subset_of(p.up(i))) found = i;
  });
  return found;
}

std::optional<Element> greatest(const FinitePoset& p, const Subset& s) {
  std::optional<Element> found;
  s.for_each([&](Element i) {
    if (!found && s.is_subset_of(p.down(i))) found = i;
  });
  return found;
}

std::optional<Element> sup(const FinitePoset& p, const Subset& s) { return least(p, upper_bounds(p, s)); }
std::optional<Element> inf(const FinitePoset& p, const Subset& s) { return greatest(p, lower_bounds(p, s)); }

std::vector<std::pair<Element, Element>> hasse(const FinitePoset& p) {
  std::vector<std::pair<Element, Element>> covers;
  for (Element x = 0; x < p.size(); ++x) {
    Subset above = p.up(x);
    above.erase(x);
    above.for_each([&](Element y) {
      Subset between = above & p.down(y);
      between.erase(y);
      if (between.empty()) covers.emplace_back(x, y);
    });
  }
  return covers;
}

FinitePoset dual(const FinitePoset& p) {
  std::vector<Subset> up(p.size());
  for (Element i = 0; i < p.size(); ++i) up[i] = p.down(i);
  std::string name = p.name();
  if (name.size() > 3 && name.ends_with("^op"))
    name.resize(name.size() - 3);
  else if (!name.empty())
    name += "^op";
  return FinitePoset(std::move(name), p.labels(), std::move(up));
}

FinitePoset permute(const FinitePoset& p, const std::vector<Element>& order) {
  const std::size_t n = p.size();
  assert(order.size() == n);
  std::vector<Element> position(n);
  for (Element k = 0; k < n; ++k) position[order[k]] = k;
  std::vector<std::string> labels(n);
  std::vector<Subset> up(n, Subset(n));
  for (Element k = 0; k < n; ++k) {
    labels[k] = p.label(order[k]);
    p.up(order[k]).for_each([&](Element j) { up[k].insert(position[j]); });
  }
  return FinitePoset(p.name(), std::move(labels), std::move(up));
}

std::vector<Element> linear_extension(const FinitePoset& p) {
  std::vector<Element> order(p.size());
  std::iota(order.begin(), order.end(), Element{0});
  // x < y implies |down x| < |down y|.
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return p.down(a).count() < p.down(b).count(); });
  return order;
}

namespace {

// Every undecided element can be both included and excluded: `in` is upward
// closed and `out` downward closed, so no branch dead-ends.
bool upper_set_branch(const FinitePoset& p, const std::vector<Element>& order, std::size_t pos, Subset& in,
                      Subset& out, std::size_t& visited, const std::function<bool(const Subset&)>& visit) {
  while (pos < order.size() && (in.contains(order[pos]) || out.contains(order[pos]))) ++pos;
  if (pos == order.size()) {
    ++visited;
    return visit(in);
  }
  const Element x = order[pos];
  {
    Subset saved = out;
    out |= p.down(x);
    const bool go = upper_set_branch(p, order, pos + 1, in, out, visited, visit);
    out = std::move(saved);
    if (!go) return false;
  }
  Subset saved = in;
  in |= p.up(x);
  const bool go = upper_set_branch(p, order, pos + 1, in, out, visited, visit);
  in = std::move(saved);
  return go;
}

}  // namespace

std::size_t for_each_upper_set(const FinitePoset& p, const std::function<bool(const Subset&)>& visit) {
  const auto order = linear_extension(p);
  Subset in(p.size()), out(p.size());
  std::size_t visited = 0;
  upper_set_branch(p, order, 0, in, out, visited, visit);
  return visited;
}

std::size_t count_upper_sets(const FinitePoset& p, std::size_t stop_after) {
  std::size_t c = 0;
  for_each_upper_set(p, [&](const Subset&) { return ++c <= stop_after; });
  return c;
}

std::vector<Subset> upper_sets(const FinitePoset& p, std::size_t limit) {
  const std::size_t c = count_upper_sets(p, limit);
  if (c > limit) throw SizeLimit("upper sets of '" + p.name() + "'", limit, limit, false);
  std::vector<Subset> out;
  out.reserve(c);
  for_each_upper_set(p, [&](const Subset& s) {
    out.push_back(s);
    return true;
  });
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) { return shortlex_less(a, b); });
  return out;
}

std::vector<Subset> lower_sets(const FinitePoset& p, std::size_t limit) {
  return upper_sets(dual(p), limit);
}

void require_subset_cap(std::size_t n, const char* what) {
  if (n > limits().subset_max_n) throw SizeLimit(what, n, limits().subset_max_n);
}

std::vector<DirectedSet> directed_subsets(const FinitePoset& p) {
  const std::size_t n = p.size();
  require_subset_cap(n, "directed-subset enumeration (elements)");
  const auto up = p.up_masks();
  std::vector<DirectedSet> out;
  for_each_mask_shortlex(n, [&](std::uint64_t d) {
    if (!d) return true;
    std::uint64_t rest = d;
    std::uint64_t bounds = ~std::uint64_t{0};
    while (rest) {
      const int a = std::countr_zero(rest);
      rest &= rest - 1;
      bounds &= up[a];
      for (std::uint64_t others = rest; others; others &= others - 1) {
        const int b = std::countr_zero(others);
        if (!(up[a] & up[b] & d)) return true;
      }
    }
    DirectedSet ds{d, std::nullopt};
    for (std::uint64_t cand = bounds & ((n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)); cand;
         cand &= cand - 1) {
      const int u = std::countr_zero(cand);
      if ((bounds & ~up[u]) == 0) {
        ds.sup = static_cast<Element>(u);
        break;
      }
    }
    out.push_back(ds);
    return true;
  });
  return out;
}

std::string letter_label(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i);
}

}  // namespace orderkit
