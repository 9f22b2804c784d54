#include "orderkit/properties.hpp"

#include <bit>
#include <cmath>

#include "orderkit/errors.hpp"
#include "orderkit/limits.hpp"
#include "orderkit/stone_dual.hpp"

namespace orderkit {

namespace {

std::vector<std::string> labels_of_mask(const FinitePoset& p, std::uint64_t m) {
  return p.labels_of(Subset::from_mask(p.size(), m));
}

std::string label_or_none(const FinitePoset& p, std::optional<Element> e) { return e ? p.label(*e) : "none"; }

std::uint64_t all_mask(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Shared by is_continuous / is_prime_continuous / is_hypercontinuous: every y
// must be the sup of its predecessors under `r`.
Verdict join_of_predecessors(const FiniteLattice& l, const Relation& r, const char* what) {
  for (Element y = 0; y < l.size(); ++y) {
    const Subset preds = r.column(y);
    const Element s = l.sup(preds);
    if (s != y) {
      return Verdict::fail({{l.label(y)}, {l.poset().labels_of(preds)}, l.label(s), l.label(y),
                            std::string("sup of ") + what + "-predecessors differs from the element"});
    }
  }
  return Verdict::pass();
}

}  // namespace

Verdict is_continuous(const FinitePoset& p, Mode mode) {
  const Relation wb = way_below(p, mode);
  for (Element x = 0; x < p.size(); ++x) {
    const Subset approx = wb.column(x);
    if (!is_directed(p, approx))
      return Verdict::fail({{p.label(x)}, {p.labels_of(approx)}, std::nullopt, std::nullopt,
                            "approximants are not directed"});
    const auto s = sup(p, approx);
    if (s != x)
      return Verdict::fail({{p.label(x)}, {p.labels_of(approx)}, label_or_none(p, s), p.label(x),
                            "sup of approximants differs from the element"});
  }
  return Verdict::pass();
}

Verdict is_quasicontinuous(const FinitePoset& p) {
  for (Element x = 0; x < p.size(); ++x) {
    const FinFamily fam = fin_family(p, x);
    const auto& ms = fam.members;
    if (ms.empty()) return Verdict::fail({{p.label(x)}, {}, std::nullopt, std::nullopt, "fin(x) is empty"});
    for (std::size_t i = 0; i < ms.size(); ++i) {
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        const Subset both = ms[i] & ms[j];
        bool bounded = false;
        for (const auto& m : ms)
          if (m.is_subset_of(both)) {
            bounded = true;
            break;
          }
        if (!bounded)
          return Verdict::fail({{p.label(x)}, {p.labels_of(ms[i]), p.labels_of(ms[j])}, std::nullopt, std::nullopt,
                                "fin(x) is not directed under reverse inclusion"});
      }
    }
    Subset meet = p.full_subset();
    for (const auto& m : ms) meet &= m;
    if (meet != p.up(x))
      return Verdict::fail({{p.label(x)}, {p.labels_of(meet), p.labels_of(p.up(x))}, std::nullopt, std::nullopt,
                            "intersection of fin(x) differs from up(x)"});
  }
  return Verdict::pass();
}

Verdict is_meet_continuous(const FinitePoset& p, Mode mode) {
  const auto directed = directed_subsets(p);
  for (Element x = 0; x < p.size(); ++x) {
    for (const auto& d : directed) {
      if (!d.sup || !p.leq(x, *d.sup)) continue;
      const Subset dset = Subset::from_mask(p.size(), d.members);
      const Subset seed = p.down(x) & down_closure(p, dset);
      if (!scott_closure(p, seed, mode).contains(x))
        return Verdict::fail({{p.label(x)}, {p.labels_of(dset)}, std::nullopt, std::nullopt,
                              "x is outside the Scott closure of down(x) & down(D)"});
    }
  }
  return Verdict::pass();
}

Verdict is_meet_continuous_algebraic(const FiniteLattice& l) {
  const FinitePoset& p = l.poset();
  const auto directed = directed_subsets(p);
  for (Element x = 0; x < l.size(); ++x) {
    for (const auto& d : directed) {
      const Element lhs = l.meet(x, l.sup_mask(d.members));
      Element rhs = l.bottom();
      for (std::uint64_t m = d.members; m; m &= m - 1)
        rhs = l.join(rhs, l.meet(x, static_cast<Element>(std::countr_zero(m))));
      if (lhs != rhs) return Verdict::fail({{l.label(x)}, {labels_of_mask(p, d.members)}, l.label(lhs), l.label(rhs), {}});
    }
  }
  return Verdict::pass();
}

Verdict is_join_continuous(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Element x = 0; x < n; ++x) {
    for (Element s = 0; s < n; ++s) {
      for (Element t = s + 1; t < n; ++t) {
        const Element lhs = l.join(x, l.meet(s, t));
        const Element rhs = l.meet(l.join(x, s), l.join(x, t));
        if (lhs != rhs)
          return Verdict::fail({{l.label(x)}, {{l.label(s), l.label(t)}}, l.label(lhs), l.label(rhs), {}});
      }
    }
  }
  return Verdict::pass();
}

Verdict join_continuity_oracle(const FiniteLattice& l) {
  const std::size_t n = l.size();
  require_subset_cap(n, "join-continuity oracle (elements)");
  for (Element x = 0; x < n; ++x) {
    std::optional<Verdict> failure;
    for_each_mask_shortlex(n, [&](std::uint64_t s) {
      const Element lhs = l.join(x, l.inf_mask(s));
      Element rhs = l.top();
      for (std::uint64_t m = s; m; m &= m - 1) rhs = l.meet(rhs, l.join(x, static_cast<Element>(std::countr_zero(m))));
      if (lhs == rhs) return true;
      failure = Verdict::fail({{l.label(x)}, {labels_of_mask(l.poset(), s)}, l.label(lhs), l.label(rhs), {}});
      return false;
    });
    if (failure) return *failure;
  }
  return Verdict::pass();
}

Verdict is_frame(const FiniteLattice& l) {
  Verdict v = is_join_continuous(l.dual());
  if (!v.holds) v.witness->detail = "x meet sup(S) differs from sup{x meet s}";
  return v;
}

Verdict is_hypercontinuous(const FiniteLattice& l, Mode mode) {
  return join_of_predecessors(l, prec(l, mode), "prec");
}

Verdict is_prime_continuous(const FiniteLattice& l, Mode mode) {
  return join_of_predecessors(l, way_way_below(l, mode), "way-way-below");
}

Verdict is_distributive(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        const Element lhs = l.meet(x, l.join(y, z));
        const Element rhs = l.join(l.meet(x, y), l.meet(x, z));
        if (lhs != rhs) return Verdict::fail({{l.label(x), l.label(y), l.label(z)}, {}, l.label(lhs), l.label(rhs), {}});
      }
  return Verdict::pass();
}

Verdict is_completely_distributive_oracle(const FiniteLattice& l, std::size_t family_bound) {
  const std::size_t n = l.size();
  require_subset_cap(n, "complete-distributivity oracle (elements)");
  // Families are multisets of index subsets; refuse beyond ~2^32 of them.
  const double families = std::pow(std::ldexp(1.0, static_cast<int>(n)), static_cast<double>(family_bound));
  if (families > std::ldexp(1.0, 32))
    throw SizeLimit("complete-distributivity oracle (families)", static_cast<std::size_t>(std::min(families, 1e18)),
                    std::size_t{1} << 32);

  std::vector<std::uint64_t> subsets;
  for_each_mask_shortlex(n, [&](std::uint64_t m) {
    subsets.push_back(m);
    return true;
  });

  std::vector<std::size_t> pick;  // indices into `subsets`, nondecreasing
  std::vector<std::vector<Element>> members;
  std::vector<std::size_t> choice;

  auto check_family = [&]() -> std::optional<Verdict> {
    Element lhs = l.top();
    members.assign(pick.size(), {});
    for (std::size_t i = 0; i < pick.size(); ++i) {
      const std::uint64_t j = subsets[pick[i]];
      lhs = l.meet(lhs, l.sup_mask(j));
      for (std::uint64_t m = j; m; m &= m - 1) members[i].push_back(static_cast<Element>(std::countr_zero(m)));
    }
    Element rhs = l.bottom();
    bool any_empty = false;
    for (const auto& ms : members) any_empty = any_empty || ms.empty();
    if (!any_empty) {
      choice.assign(pick.size(), 0);
      while (true) {
        Element term = l.top();
        for (std::size_t i = 0; i < pick.size(); ++i) term = l.meet(term, members[i][choice[i]]);
        rhs = l.join(rhs, term);
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == members[i].size()) choice[i++] = 0;
        if (i == choice.size()) break;
      }
    }
    if (lhs == rhs) return std::nullopt;
    Witness w;
    for (auto idx : pick) w.subsets.push_back(labels_of_mask(l.poset(), subsets[idx]));
    w.lhs = l.label(lhs);
    w.rhs = l.label(rhs);
    w.detail = "meet of joins differs from join over choice functions";
    return Verdict::fail(std::move(w));
  };

  for (std::size_t size = 0; size <= family_bound; ++size) {
    pick.assign(size, 0);
    while (true) {
      if (auto f = check_family()) return *f;
      // Next nondecreasing index tuple.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == subsets.size() - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t k = i; k < size; ++k) pick[k] = pick[i - 1];
    }
  }
  return Verdict::pass();
}

Element supinf_continuous_rhs(const FiniteLattice& l, Element x) {
  const std::size_t limit = limits().upper_set_limit;
  if (count_upper_sets(l.poset(), limit) > limit) throw SizeLimit("Scott-open sets", limit, limit, false);
  Element acc = l.bottom();
  for_each_upper_set(l.poset(), [&](const Subset& u) {
    if (u.contains(x)) acc = l.join(acc, l.inf(u));
    return true;
  });
  return acc;
}

Element supinf_hyper_rhs(const FiniteLattice& l, Element x) {
  const std::size_t n = l.size();
  require_subset_cap(n, "hypercontinuity sup-inf form (elements)");
  const auto down = l.poset().down_masks();
  const std::uint64_t all = all_mask(n);
  Element acc = l.bottom();
  for (std::uint64_t m = 0;; ++m) {
    std::uint64_t down_m = 0;
    for (std::uint64_t r = m; r; r &= r - 1) down_m |= down[std::countr_zero(r)];
    if (!((down_m >> x) & 1U)) acc = l.join(acc, l.inf_mask(all & ~down_m));
    if (m == all) break;
  }
  return acc;
}

Element supinf_prime_rhs(const FiniteLattice& l, Element x) {
  Element acc = l.bottom();
  for (Element y = 0; y < l.size(); ++y)
    if (!l.leq(x, y)) acc = l.join(acc, l.inf(~l.poset().down(y)));
  return acc;
}

}  // namespace orderkit
