#include <doctest.h>

#include <bit>
#include <limits>
#include <stdexcept>

#include "sumset/constructions.hpp"
#include "sumset/element_table.hpp"
#include "sumset/sumset.hpp"
#include "support.hpp"

using namespace sumset;
using testing::ints;

TEST_CASE("sumset examples") {
  CHECK(sumset::sumset(ints({0, 1}), ints({0, 1})) == ints({0, 1, 2}));
  CHECK(sumset::sumset(ints({1, 3, 9}), ints({1, 3, 9})).size() == 6);
  PointSet z5(GroupSpec::cyclic(5, 1), {{0}, {1}, {2}, {3}, {4}});
  CHECK(sumset::sumset(z5, z5) == z5);
}

TEST_CASE("sumset preconditions") {
  CHECK_THROWS_AS(sumset::sumset(ints({}), ints({1})), std::invalid_argument);
  PointSet z5(GroupSpec::cyclic(5, 1), {{0}});
  CHECK_THROWS_AS(sumset::sumset(z5, ints({1})), std::invalid_argument);
  CHECK_THROWS_AS(iterated_sumset(ints({1}), 0), std::invalid_argument);
  CHECK_THROWS_AS(profile(ints({1}), 1), std::invalid_argument);
  CHECK_THROWS_AS(is_dissociated(ints({1}), 1), std::invalid_argument);
}

TEST_CASE("iterated sumset examples") {
  auto a = ints({4, -1, 7});
  CHECK(iterated_sumset(a, 1) == a);
  CHECK(iterated_sumset(ints({1, 3, 9}), 3).size() == 10);
  CHECK(iterated_sumset(ints({0, 1, 2}), 3) == ints({0, 1, 2, 3, 4, 5, 6}));
}

TEST_CASE("profile examples") {
  auto geo = gen_geometric(10).set;
  auto p = profile(geo, 3);
  CHECK(p.sizes == std::vector<std::uint64_t>{10, 55, 220});
  CHECK(p.K == Rational(11, 2));
  CHECK(p.alpha[2] == Rational(22));

  auto one = profile(ints({42}), 4);
  CHECK(one.sizes == std::vector<std::uint64_t>{1, 1, 1, 1});
  CHECK(one.K == Rational(1));

  auto ruzsa = profile(gen_ruzsa(2, 8).set, 3);
  CHECK(ruzsa.sizes == std::vector<std::uint64_t>{26, 222, 932});
}

TEST_CASE("is_dissociated examples") {
  CHECK(is_dissociated(gen_geometric(10).set, 3));
  CHECK_FALSE(is_dissociated(ints({0, 1, 2}), 2));
  CHECK(is_dissociated(ints({5}), 2));
  CHECK(is_dissociated(ints({5}), 7));
}

TEST_CASE("iterated sumset matches tuple enumeration") {
  SplitMix64 rng(2024);
  const GroupSpec groups[] = {GroupSpec::integers(1), GroupSpec::integers(2), GroupSpec::cyclic(16, 2),
                              GroupSpec({0, 3})};
  for (const auto& g : groups) {
    for (int t = 0; t < 60; ++t) {
      auto a = testing::random_set(g, 8, 20, rng);
      for (unsigned h = 1; h <= 3; ++h) {
        CHECK(testing::as_set(iterated_sumset(a, h)) == testing::brute_iterated(a, h));
      }
    }
  }
}

TEST_CASE("sumset is commutative and monotone") {
  SplitMix64 rng(77);
  for (int t = 0; t < 200; ++t) {
    auto a = testing::random_set(GroupSpec::integers(2), 6, 10, rng);
    auto b = testing::random_set(GroupSpec::integers(2), 6, 10, rng);
    auto extra = testing::random_set(GroupSpec::integers(2), 3, 10, rng);
    auto ab = sumset::sumset(a, b);
    CHECK(ab == sumset::sumset(b, a));
    CHECK(ab.is_subset_of(sumset::sumset(a.set_union(extra), b)));
  }
}

TEST_CASE("trivial bounds and dissociation hereditary on subsets of 0..12") {
  int checked = 0;
  for (std::uint32_t mask = 1; mask < (1u << 13); ++mask) {
    if (std::popcount(mask) > 4) continue;
    auto a = testing::from_mask(mask, 13);
    const auto n = a.size();
    const auto two = sumset::sumset(a, a).size();
    CHECK(n <= two);
    CHECK(two <= n * (n + 1) / 2);
    for (unsigned h = 3; h <= 4; ++h) {
      if (is_dissociated(a, h)) CHECK(is_dissociated(a, h - 1));
    }
    ++checked;
  }
  CHECK(checked == 1092);
}

TEST_CASE("element table keeps lex order and falls back on wide ranges") {
  GroupSpec g({0, 9});
  const std::vector<std::int64_t> lo{-5, 0}, hi{5, 8};
  ElementTable t(g, lo, hi, 4);
  CHECK(t.insert(std::vector<std::int64_t>{3, 1}));
  CHECK(t.insert(std::vector<std::int64_t>{-5, 8}));
  CHECK_FALSE(t.insert(std::vector<std::int64_t>{3, 1}));
  CHECK(t.contains(std::vector<std::int64_t>{-5, 8}));
  CHECK(t.size() == 2);
  CHECK(t.sorted_flat() == std::vector<std::int64_t>{-5, 8, 3, 1});

  const auto big = std::int64_t{1} << 40;
  const std::vector<std::int64_t> wlo{-big, -big}, whi{big, big};
  ElementTable wide(GroupSpec::integers(2), wlo, whi, 2);
  CHECK_FALSE(wide.packed());
  wide.insert(std::vector<std::int64_t>{big, 0});
  wide.insert(std::vector<std::int64_t>{-big, 7});
  CHECK(wide.sorted_flat() == std::vector<std::int64_t>{-big, 7, big, 0});
}

TEST_CASE("sums near the coordinate limit are reported") {
  const auto top = std::numeric_limits<std::int64_t>::max() / 2 + 10;
  CHECK_THROWS_AS(sumset::sumset(ints({top}), ints({top})), std::overflow_error);
}
