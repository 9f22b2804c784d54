#include "orderkit/subset.hpp"

#include <cassert>

namespace orderkit {

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (universe % 64 != 0) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

Subset Subset::from_mask(std::size_t universe, std::uint64_t mask) {
  assert(universe <= 64);
  Subset s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

Subset Subset::of(std::size_t universe, std::initializer_list<std::size_t> members) {
  Subset s(universe);
  for (auto i : members) s.insert(i);
  return s;
}

std::size_t Subset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Subset::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool Subset::is_subset_of(const Subset& other) const {
  assert(n_ == other.n_);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

bool Subset::intersects(const Subset& other) const {
  assert(n_ == other.n_);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & other.words_[w]) return true;
  return false;
}

std::vector<std::size_t> Subset::members() const {
  std::vector<std::size_t> out;
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

Subset& Subset::operator|=(const Subset& o) {
  assert(n_ == o.n_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  return *this;
}

Subset& Subset::operator&=(const Subset& o) {
  assert(n_ == o.n_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
  return *this;
}

Subset& Subset::operator-=(const Subset& o) {
  assert(n_ == o.n_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
  return *this;
}

Subset Subset::operator~() const { return full(n_) - *this; }

std::size_t Subset::hash() const {
  std::size_t h = n_ * 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool shortlex_less(const Subset& a, const Subset& b) {
  const auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.members() < b.members();
}

bool shortlex_less(std::uint64_t a, std::uint64_t b) {
  const int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  // With equal sizes, the first differing member decides: the set holding the
  // smaller element of the symmetric difference comes first.
  const std::uint64_t diff = a ^ b;
  if (!diff) return false;
  return (a >> std::countr_zero(diff)) & 1U;
}

bool for_each_mask_shortlex(std::size_t n, const std::function<bool(std::uint64_t)>& f) {
  assert(n <= 63);
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k <= n; ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (auto i : idx) mask |= std::uint64_t{1} << i;
      if (!f(mask)) return false;
      // Advance to the next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

}  // namespace orderkit
