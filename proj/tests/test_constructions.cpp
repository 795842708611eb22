#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sumset/constructions.hpp"
#include "sumset/sumset.hpp"
#include "support.hpp"

using namespace sumset;

TEST_CASE("geometric progressions") {
  auto c = gen_geometric(10);
  CHECK(profile(c.set, 3).sizes == std::vector<std::uint64_t>{10, 55, 220});
  CHECK(gen_geometric(1).set == testing::ints({1}));
  CHECK(is_dissociated(gen_geometric(3).set, 3));
  CHECK(is_dissociated(gen_geometric(6, 4).set, 3));
  CHECK_THROWS_AS(gen_geometric(0), std::invalid_argument);
  CHECK_THROWS_AS(gen_geometric(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(gen_geometric(50), std::overflow_error);
}

TEST_CASE("Ruzsa construction") {
  auto c = gen_ruzsa(2, 8);
  CHECK(c.spline_length == 8);
  CHECK(c.set.size() == 26);
  CHECK(iterated_sumset(c.set, 3).size() >= 512);
  CHECK(profile(c.set, 3).sizes == std::vector<std::uint64_t>{26, 222, 932});
  REQUIRE(c.part("X"));
  CHECK(c.part("X")->size() == 8);

  auto m3 = gen_ruzsa(3, 9);
  CHECK(m3.spline_length == 16);
  CHECK(profile(m3.set, 3).sizes == std::vector<std::uint64_t>{66, 1010, 6208});

  auto tiny = gen_ruzsa(1, 1);
  CHECK(tiny.spline_length == 1);
  CHECK(tiny.set == PointSet(GroupSpec::integers(3), {{0, 0, 0}}));

  CHECK_THROWS_AS(gen_ruzsa(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_ruzsa(2, 9), std::invalid_argument);
}

TEST_CASE("Ruzsa triple sums contain the spline cube") {
  for (std::int64_t m = 1; m <= 3; ++m) {
    for (double K : {double(m), double(m * m), double(m * m * m)}) {
      auto c = gen_ruzsa(m, K);
      const auto L = *c.spline_length;
      CHECK(iterated_sumset(c.set, 3).size() >= static_cast<std::size_t>(L * L * L));
    }
  }
}

TEST_CASE("random construction") {
  auto full = gen_random(2, 1.0, 4, 1);
  REQUIRE(full.part("X"));
  CHECK(full.part("X")->size() == 8);

  auto a = gen_random(3, 0.5, 9, 42);
  auto b = gen_random(3, 0.5, 9, 42);
  CHECK(a.set == b.set);
  const auto n = *a.modulus;
  CHECK(n % 3 == 0);
  CHECK(n * n >= 0.5 * 9 * 27 - 1e-9);
  CHECK(iterated_sumset(a.set, 3).size() == static_cast<std::size_t>(n * n * n));
  for (std::size_t i = 0; i < a.part("X")->size(); ++i) {
    for (auto coord : a.part("X")->at(i)) CHECK(coord % (n / 3) == 0);
  }

  CHECK_THROWS_AS(gen_random(2, 0.0, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_random(2, 0.5, 2, 1), std::invalid_argument);
}

TEST_CASE("GAP construction") {
  auto c = gen_gap(2, 2, 4);
  const PointSet* p = c.part("P");
  REQUIRE(p);
  CHECK(p->size() == 4);
  CHECK(sumset::sumset(*p, *p).size() == 9);
  CHECK(iterated_sumset(*p, 3).size() == 16);

  auto one = gen_gap(2, 1, 2);
  const PointSet* x = one.part("X");
  REQUIRE(x);
  CHECK(x->size() == 8);
  CHECK(sumset::sumset(*x, *x).size() == 27);

  CHECK(*gen_gap(1, 3, 1).part("P") == testing::ints({0}));
  CHECK_THROWS_AS(gen_gap(2, 1, 1), std::invalid_argument);
}

TEST_CASE("GAP digit sets have exact iterates") {
  for (std::int64_t k = 1; k <= 4; ++k) {
    for (std::int64_t d = 1; d <= 3; ++d) {
      auto c = gen_gap(k, d, static_cast<double>(std::llround(std::pow(k, d))));
      const PointSet& p = *c.part("P");
      auto ipow = [](std::int64_t b, std::int64_t e) {
        std::int64_t r = 1;
        while (e--) r *= b;
        return r;
      };
      CHECK(p.size() == static_cast<std::size_t>(ipow(k, d)));
      CHECK(sumset::sumset(p, p).size() == static_cast<std::size_t>(ipow(2 * k - 1, d)));
      CHECK(iterated_sumset(p, 3).size() == static_cast<std::size_t>(ipow(3 * k - 2, d)));
    }
  }
}

TEST_CASE("higher-order construction") {
  auto c = gen_higher(3, 2, 4);
  CHECK(c.modulus == 4);
  CHECK(c.set.group() == GroupSpec::cyclic(4, 4));
  CHECK(c.set.size() == 24);
  CHECK(iterated_sumset(c.set, 4).size() == 256);

  // 3Y is every vector with at most three nonzero coordinates.
  const PointSet* y = c.part("Y");
  REQUIRE(y);
  CHECK(iterated_sumset(*y, 3).size() == 256 - 81);
  CHECK(iterated_sumset(*y, 4).size() == 256);

  auto two = gen_higher(2, 2, 2);
  CHECK(two.modulus == 4);
  CHECK(two.set.group() == GroupSpec::cyclic(4, 3));
  CHECK(gen_higher(2, 2, 8).modulus == 8);

  CHECK_THROWS_AS(gen_higher(3, 2, 5), std::invalid_argument);
  CHECK_THROWS_AS(gen_higher(1, 2, 4), std::invalid_argument);
}

TEST_CASE("generate dispatches on the family") {
  ConstructionParams p;
  p.family = parse_family("gap");
  p.k = 2;
  p.d = 1;
  p.K = 2;
  CHECK(generate(p).set == gen_gap(2, 1, 2).set);
  CHECK(family_name(Family::higher) == "higher");
  CHECK_THROWS_AS(parse_family("cube"), std::invalid_argument);
}
