#include <doctest.h>

#include <algorithm>
#include <vector>

#include "orderkit/subset.hpp"

using namespace orderkit;

TEST_SUITE("subset") {
  TEST_CASE("membership and set algebra") {
    Subset a = Subset::of(10, {1, 3, 5});
    Subset b = Subset::of(10, {3, 4});
    CHECK(a.count() == 3);
    CHECK((a | b).members() == std::vector<std::size_t>{1, 3, 4, 5});
    CHECK((a & b).members() == std::vector<std::size_t>{3});
    CHECK((a - b).members() == std::vector<std::size_t>{1, 5});
    CHECK((~a).count() == 7);
    CHECK(a.intersects(b));
    CHECK_FALSE(a.is_subset_of(b));
    CHECK((a & b).is_subset_of(b));
    CHECK(Subset(10).empty());
    CHECK(Subset::full(10).count() == 10);
    a.erase(3);
    CHECK_FALSE(a.contains(3));
  }

  TEST_CASE("universes wider than one word") {
    Subset s = Subset::of(130, {0, 64, 129});
    CHECK(s.count() == 3);
    CHECK((~s).count() == 127);
    CHECK(Subset::full(130).count() == 130);
    std::vector<std::size_t> seen;
    s.for_each([&](std::size_t i) { seen.push_back(i); });
    CHECK(seen == std::vector<std::size_t>{0, 64, 129});
    CHECK(s.hash() == Subset::of(130, {0, 64, 129}).hash());
  }

  TEST_CASE("shortlex: size first, then member sequence") {
    CHECK(shortlex_less(Subset::of(5, {4}), Subset::of(5, {0, 1})));
    CHECK(shortlex_less(Subset::of(5, {0, 4}), Subset::of(5, {1, 2})));
    CHECK(shortlex_less(Subset::of(5, {0, 1, 4}), Subset::of(5, {0, 2, 3})));
    CHECK_FALSE(shortlex_less(Subset::of(5, {1}), Subset::of(5, {1})));
    CHECK(shortlex_less(std::uint64_t{0b10000}, std::uint64_t{0b00011}));
  }

  TEST_CASE("mask enumeration visits every subset once in shortlex order") {
    for (std::size_t n = 0; n <= 7; ++n) {
      std::vector<std::uint64_t> seen;
      for_each_mask_shortlex(n, [&](std::uint64_t m) {
        seen.push_back(m);
        return true;
      });
      std::vector<std::uint64_t> expected;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) expected.push_back(m);
      std::sort(expected.begin(), expected.end(), [&](std::uint64_t a, std::uint64_t b) {
        std::vector<std::size_t> ma = Subset::from_mask(n, a).members(), mb = Subset::from_mask(n, b).members();
        if (ma.size() != mb.size()) return ma.size() < mb.size();
        return ma < mb;
      });
      CHECK(seen == expected);
    }
    int calls = 0;
    CHECK_FALSE(for_each_mask_shortlex(4, [&](std::uint64_t) { return ++calls < 3; }));
    CHECK(calls == 3);
  }
}
