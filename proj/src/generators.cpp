#include "orderkit/generators.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <random>

#include "orderkit/canonical.hpp"
#include "orderkit/errors.hpp"
#include "orderkit/limits.hpp"

namespace orderkit {

namespace {

std::optional<std::size_t> parse_arg(std::string_view name, std::string_view head) {
  if (!name.starts_with(head) || !name.ends_with(")")) return std::nullopt;
  const auto inner = name.substr(head.size(), name.size() - head.size() - 1);
  std::size_t k = 0;
  auto [end, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), k);
  if (ec != std::errc{} || end != inner.data() + inner.size()) return std::nullopt;
  return k;
}

FinitePoset chain(std::size_t k) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(letter_label(i));
    if (i > 0) covers.emplace_back(labels[i - 1], labels[i]);
  }
  return build_poset("chain(" + std::to_string(k) + ")", std::move(labels), covers);
}

FinitePoset antichain(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(letter_label(i));
  return build_poset("antichain(" + std::to_string(k) + ")", std::move(labels), {});
}

FinitePoset boolean(std::size_t k) {
  if (k > 16) throw SizeLimit("boolean lattice atoms", k, 16);
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels(n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [](std::size_t a, std::size_t b) {
    return shortlex_less(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  });
  for (std::size_t i = 0; i < n; ++i) {
    std::string l = "{";
    for (std::size_t b = 0; b < k; ++b)
      if ((order[i] >> b) & 1U) {
        if (l.size() > 1) l += ',';
        l += letter_label(b);
      }
    labels[i] = l + "}";
  }
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((order[i] & ~order[j]) == 0) up[i].insert(j);
  return FinitePoset("boolean(" + std::to_string(k) + ")", std::move(labels), std::move(up));
}

}  // namespace

FinitePoset named(std::string_view name) {
  if (name == "M3")
    return build_poset("M3", {"bot", "a", "b", "c", "top"},
                       {{"bot", "a"}, {"bot", "b"}, {"bot", "c"}, {"a", "top"}, {"b", "top"}, {"c", "top"}});
  if (name == "N5")
    return build_poset("N5", {"bot", "a", "b", "c", "top"},
                       {{"bot", "a"}, {"a", "c"}, {"c", "top"}, {"bot", "b"}, {"b", "top"}});
  if (name == "one-point") return chain(1).renamed("one-point");
  if (auto k = parse_arg(name, "chain(")) return chain(*k);
  if (auto k = parse_arg(name, "antichain(")) return antichain(*k);
  if (auto k = parse_arg(name, "boolean(")) return boolean(*k);
  throw UnknownName(std::string(name));
}

std::optional<std::string> recognize(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::string> candidates = {"chain(" + std::to_string(n) + ")", "antichain(" + std::to_string(n) + ")"};
  if (n > 0 && std::has_single_bit(n)) candidates.push_back("boolean(" + std::to_string(std::countr_zero(n)) + ")");
  if (n == 5) {
    candidates.emplace_back("M3");
    candidates.emplace_back("N5");
  }
  const std::string code = canonical_code(p);
  for (const auto& c : candidates) {
    const FinitePoset q = named(c);
    if (q.size() == n && canonical_code(q) == code) return c;
  }
  return std::nullopt;
}

std::vector<FinitePoset> enumerate_posets(std::size_t n) {
  if (n > limits().enumerate_max_n) throw SizeLimit("poset enumeration (elements)", n, limits().enumerate_max_n);
  // Every poset on m+1 elements is a poset on m elements plus one new maximal
  // element, whose strict down-set is some lower set of the smaller poset.
  std::map<std::string, FinitePoset> level;
  level.emplace(canonical_code(FinitePoset("", {}, {})), FinitePoset("", {}, {}));
  for (std::size_t m = 0; m < n; ++m) {
    std::map<std::string, FinitePoset> next;
    for (const auto& [code, q] : level) {
      for (const auto& below : lower_sets(q, std::size_t{1} << 30)) {
        std::vector<std::string> labels(m + 1);
        std::vector<Subset> up(m + 1, Subset(m + 1));
        for (Element i = 0; i < m; ++i) {
          labels[i] = std::to_string(i);
          q.up(i).for_each([&](Element j) { up[i].insert(j); });
          if (below.contains(i)) up[i].insert(m);
        }
        labels[m] = std::to_string(m);
        up[m].insert(m);
        FinitePoset grown("", std::move(labels), std::move(up));
        const FinitePoset canon = canonical_form(grown);
        auto key = canonical_code(canon);
        next.emplace(std::move(key), canon);
      }
    }
    level = std::move(next);
  }
  std::vector<FinitePoset> out;
  out.reserve(level.size());
  std::size_t k = 0;
  for (const auto& [code, q] : level)
    out.push_back(q.renamed("P" + std::to_string(n) + "." + std::to_string(k++)));
  return out;
}

std::vector<FiniteLattice> enumerate_lattices(std::size_t n) {
  std::vector<FiniteLattice> out;
  std::size_t k = 0;
  for (const auto& p : enumerate_posets(n)) {
    if (!is_lattice(p)) continue;
    out.push_back(as_lattice(p.renamed("L" + std::to_string(n) + "." + std::to_string(k++))));
  }
  return out;
}

FinitePoset random_poset(const GenSpec& spec) {
  const std::size_t n = spec.n;
  std::mt19937_64 rng(spec.seed);
  // Both the shuffle and the coin flips are written out so the stream is
  // identical across standard libraries.
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  auto coin = [&]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = letter_label(i);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin() < spec.density) pairs.emplace_back(labels[order[i]], labels[order[j]]);
  return build_poset("random(n=" + std::to_string(n) + ",seed=" + std::to_string(spec.seed) + ")",
                     std::move(labels), pairs);
}

}  // namespace orderkit
