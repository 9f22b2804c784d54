#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace orderkit {

/// A set of element indices over a carrier of fixed size, stored as a
/// bit-vector. Two subsets can only be combined when their universes match.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  static Subset full(std::size_t universe);
  static Subset from_mask(std::size_t universe, std::uint64_t mask);
  static Subset of(std::size_t universe, std::initializer_list<std::size_t> members);

  std::size_t universe() const { return n_; }

  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const;
  bool empty() const;
  bool is_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;

  /// Members in increasing index order.
  std::vector<std::size_t> members() const;

  /// Calls `f(i)` for each member in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  /// Low 64 members as a mask; only meaningful when universe() <= 64.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  Subset& operator|=(const Subset& o);
  Subset& operator&=(const Subset& o);
  Subset& operator-=(const Subset& o);
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }
  /// Complement relative to the universe.
  Subset operator~() const;

  friend bool operator==(const Subset&, const Subset&) = default;

  std::size_t hash() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Shortlex order on member lists: smaller sets first, then lexicographic on
/// the increasing member sequence. This is the canonical subset order used for
/// witness selection and for sorting families of sets.
bool shortlex_less(const Subset& a, const Subset& b);

/// Same order for masks over a universe of at most 64 elements.
bool shortlex_less(std::uint64_t a, std::uint64_t b);

/// Every mask over `n` elements in shortlex order, calling `f(mask)`; stops
/// early when `f` returns false. Returns false iff stopped early.
bool for_each_mask_shortlex(std::size_t n, const std::function<bool(std::uint64_t)>& f);

}  // namespace orderkit

template <>
struct std::hash<orderkit::Subset> {
  std::size_t operator()(const orderkit::Subset& s) const { return s.hash(); }
};
