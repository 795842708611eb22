#include <doctest.h>

#include <bit>
#include <cmath>
#include <stdexcept>

#include "sumset/bounds.hpp"
#include "sumset/constructions.hpp"
#include "sumset/sumset.hpp"
#include "support.hpp"

using namespace sumset;
using testing::ints;

TEST_CASE("binom_real examples") {
  CHECK(binom_real(10.0, 2) == 45.0);
  CHECK(binom_real(11.0, 2) == 55.0);
  CHECK(binom_real(2.5, 3) == doctest::Approx(0.3125).epsilon(1e-15));
  CHECK(binom_real(3.0, 5) == 0.0);
  CHECK(binom_real(7.0, 0) == 1.0);
  CHECK(binom_real(Rational(5, 2), 3) == Rational(5, 16));
  CHECK(binom_real(Rational(12), 3) == Rational(220));
}

TEST_CASE("invert_binom examples") {
  CHECK(invert_binom(55, 2) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(invert_binom(1, 3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(invert_binom(7, 2) == doctest::Approx((-1.0 + std::sqrt(57.0)) / 2.0).epsilon(1e-12));
  CHECK(invert_binom(7, 2) == doctest::Approx(3.274917217635375).epsilon(1e-12));
  CHECK_THROWS_AS(invert_binom(0.5, 2), std::domain_error);
}

TEST_CASE("exact binomial roots") {
  CHECK(exact_binom_root(55, 2) == 10);
  CHECK(exact_binom_root(220, 3) == 10);
  CHECK_FALSE(exact_binom_root(19, 2).has_value());
  CHECK(exact_binom_root(1, 4) == 1);
}

TEST_CASE("invert_binom round trip") {
  for (int i = 0; i < 2000; ++i) {
    const double x = 1.0 + (1e6 - 1.0) * i / 1999.0;
    for (unsigned h = 2; h <= 3; ++h) {
      const double r = binom_real(x + h - 1.0, h);
      CHECK(std::abs(invert_binom(r, h) - x) <= 1e-9 * x);
    }
  }
}

TEST_CASE("bound suite on the geometric progression") {
  auto rep = bound_suite(gen_geometric(10).set, 3);
  CHECK(rep.all_hold());
  auto mac = rep.find("macaulay", 2);
  REQUIRE(mac);
  REQUIRE(mac->exact_bound);
  CHECK(*mac->exact_bound == 220);
  CHECK(mac->measured == 220);
  CHECK(mac->equality);
  CHECK(rep.find("macaulay-equality", 2)->holds);
  CHECK(rep.x() == doctest::Approx(10.0));
}

TEST_CASE("bound suite on an interval") {
  std::vector<std::int64_t> v;
  for (int i = 0; i < 10; ++i) v.push_back(i);
  auto rep = bound_suite(ints(v), 3);
  CHECK(rep.sizes[1] == 19);
  CHECK(rep.sizes[2] == 28);
  CHECK(rep.x() == doctest::Approx(5.68465843842649).epsilon(1e-12));
  auto mac = rep.find("macaulay", 2);
  REQUIRE(mac);
  CHECK_FALSE(mac->exact_bound.has_value());
  CHECK(mac->bound == doctest::Approx(48.669503443367766).epsilon(1e-12));
  CHECK(mac->holds);
  CHECK(rep.all_hold());
}

TEST_CASE("Plunnecke holds with equality on a coset") {
  PointSet coset(GroupSpec::cyclic(6, 1), {{0}, {2}, {4}});
  auto rep = bound_suite(coset, 4);
  for (unsigned h = 3; h <= 4; ++h) {
    auto c = rep.find("plunnecke", h);
    REQUIRE(c);
    CHECK(c->holds);
    CHECK(c->equality);
    CHECK(c->measured == 3);
  }
  CHECK(rep.all_hold());
}

TEST_CASE("every bound holds on random sets") {
  SplitMix64 rng(500);
  const GroupSpec groups[] = {GroupSpec::integers(1), GroupSpec::integers(2), GroupSpec::cyclic(16, 2)};
  int total = 0;
  for (int t = 0; t < 500; ++t) {
    const auto& g = groups[t % 3];
    auto a = testing::random_set(g, 9, 12, rng);
    auto rep = bound_suite(a, 4);
    for (const auto& c : rep.checks) {
      INFO(c.name << " h=" << c.h);
      CHECK(c.holds);
    }
    ++total;
  }
  CHECK(total == 500);
}

TEST_CASE("Macaulay equality iff 3-dissociated on subsets of 0..12") {
  for (std::uint32_t mask = 1; mask < (1u << 13); ++mask) {
    if (std::popcount(mask) > 4) continue;
    auto a = testing::from_mask(mask, 13);
    auto rep = bound_suite(a, 3);
    auto mac = rep.find("macaulay", 2);
    REQUIRE(mac);
    CHECK(mac->holds);
    const auto n = static_cast<std::int64_t>(a.size());
    const bool top = rep.sizes[2] == static_cast<std::uint64_t>(*binomial(n + 2, 3));
    CHECK(top == is_dissociated(a, 3));
    if (mac->exact_bound) CHECK(rep.find("macaulay-equality", 2)->holds);
  }
}

TEST_CASE("Macaulay bound dominates the Ruzsa bound") {
  for (int i = 0; i <= 1000; ++i) {
    const long double x = 1.0L + i * 0.25L;
    CHECK(binom_real(x + 2.0L, 3) <= std::pow(binom_real(x + 1.0L, 2), 1.5L) * (1.0L + 1e-12L));
  }
}
