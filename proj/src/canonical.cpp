#include "orderkit/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace orderkit {

namespace {

using Signature = std::vector<std::size_t>;

std::vector<std::size_t> rank_signatures(const std::vector<Signature>& sigs) {
  std::vector<Signature> distinct = sigs;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::size_t> colors(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i)
    colors[i] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), sigs[i]) - distinct.begin());
  return colors;
}

std::size_t class_count(const std::vector<std::size_t>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

}  // namespace

std::vector<std::size_t> refined_colors(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<Element>> lower_covers(n), upper_covers(n);
  for (auto [x, y] : hasse(p)) {
    upper_covers[x].push_back(y);
    lower_covers[y].push_back(x);
  }

  std::vector<Signature> sigs(n);
  for (Element i = 0; i < n; ++i)
    sigs[i] = {p.down(i).count(), p.up(i).count(), lower_covers[i].size(), upper_covers[i].size()};
  auto colors = rank_signatures(sigs);

  while (true) {
    for (Element i = 0; i < n; ++i) {
      Signature s{colors[i]};
      auto append_sorted = [&](auto&& range) {
        std::vector<std::size_t> c;
        for (Element j : range) c.push_back(colors[j]);
        std::sort(c.begin(), c.end());
        s.push_back(c.size());
        s.insert(s.end(), c.begin(), c.end());
      };
      append_sorted(lower_covers[i]);
      append_sorted(upper_covers[i]);
      Subset below = p.down(i), above = p.up(i);
      below.erase(i);
      above.erase(i);
      append_sorted(below.members());
      append_sorted(above.members());
      sigs[i] = std::move(s);
    }
    auto next = rank_signatures(sigs);
    const bool stable = class_count(next) == class_count(colors);
    colors = std::move(next);
    if (stable) break;
  }
  return colors;
}

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const FinitePoset& p) : p_(p), n_(p.size()), colors_(refined_colors(p)) {
    slot_color_ = colors_;
    std::sort(slot_color_.begin(), slot_color_.end());
    used_.assign(n_, false);
    current_.reserve(n_);
    blocks_.assign(n_, {});
    // Twins have the same strict up- and down-sets; swapping two of them is
    // an automorphism fixing everything else.
    twin_rep_.resize(n_);
    for (Element v = 0; v < n_; ++v) {
      twin_rep_[v] = v;
      for (Element w = 0; w < v; ++w)
        if (twin_rep_[w] == w && colors_[w] == colors_[v] && strict_equal(w, v)) {
          twin_rep_[v] = w;
          break;
        }
    }
  }

  CanonicalLabeling run() {
    descend(false);
    CanonicalLabeling out;
    out.order = best_order_;
    for (const auto& b : best_blocks_) out.code += b;
    return out;
  }

 private:
  std::string block_for(Element v) const {
    std::string b;
    b.reserve(2 * current_.size());
    for (Element u : current_) {
      b.push_back(p_.leq(u, v) ? '1' : '0');
      b.push_back(p_.leq(v, u) ? '1' : '0');
    }
    return b;
  }

  // `ahead` means the current prefix is already strictly smaller than the
  // best code, so nothing below it needs comparing.
  void descend(bool ahead) {
    const std::size_t k = current_.size();
    if (k == n_) {
      if (ahead || !have_best_) {
        best_blocks_ = blocks_;
        best_order_ = current_;
        have_best_ = true;
      }
      return;
    }
    // Only candidates with the least block can start a least code.
    std::vector<std::pair<Element, std::string>> cands;
    for (Element v = 0; v < n_; ++v) {
      if (used_[v] || colors_[v] != slot_color_[k]) continue;
      std::string block = block_for(v);
      if (!cands.empty()) {
        const int c = block.compare(cands.front().second);
        if (c > 0) continue;
        if (c < 0) cands.clear();
      }
      cands.emplace_back(v, std::move(block));
    }
    std::vector<Element> tried;
    for (auto& [v, block] : cands) {
      if (std::any_of(tried.begin(), tried.end(), [&](Element w) { return twin_rep_[w] == twin_rep_[v]; })) continue;
      tried.push_back(v);
      bool next_ahead = ahead;
      if (have_best_ && !ahead) {
        const int c = block.compare(best_blocks_[k]);
        if (c > 0) return;
        next_ahead = c < 0;
      }
      blocks_[k] = std::move(block);
      used_[v] = true;
      current_.push_back(v);
      descend(next_ahead);
      current_.pop_back();
      used_[v] = false;
    }
  }

  bool strict_equal(Element a, Element b) const {
    Subset ua = p_.up(a), ub = p_.up(b), da = p_.down(a), db = p_.down(b);
    ua.erase(a);
    ub.erase(b);
    da.erase(a);
    db.erase(b);
    return ua == ub && da == db;
  }

  const FinitePoset& p_;
  std::size_t n_;
  std::vector<std::size_t> colors_, slot_color_;
  std::vector<bool> used_;
  std::vector<Element> current_;
  std::vector<std::string> blocks_;
  std::vector<std::string> best_blocks_;
  std::vector<Element> best_order_;
  std::vector<Element> twin_rep_;
  bool have_best_ = false;
};

}  // namespace

CanonicalLabeling canonical_labeling(const FinitePoset& p) { return CanonicalSearch(p).run(); }

std::string canonical_code(const FinitePoset& p) { return canonical_labeling(p).code; }

FinitePoset canonical_reorder(const FinitePoset& p) { return permute(p, canonical_labeling(p).order); }

FinitePoset canonical_form(const FinitePoset& p) {
  const FinitePoset q = canonical_reorder(p);
  std::vector<std::string> labels(q.size());
  std::vector<Subset> up(q.size());
  for (Element i = 0; i < q.size(); ++i) {
    labels[i] = std::to_string(i);
    up[i] = q.up(i);
  }
  return FinitePoset(p.name(), std::move(labels), std::move(up));
}

bool is_isomorphic(const FinitePoset& a, const FinitePoset& b) {
  if (a.size() != b.size()) return false;
  return canonical_code(a) == canonical_code(b);
}

bool canonical_less(const FinitePoset& a, const FinitePoset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return canonical_code(a) < canonical_code(b);
}

}  // namespace orderkit
