#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumset/point_set.hpp"
#include "sumset/rational.hpp"
#include "sumset/sumset.hpp"

namespace sumset {

/// x(x-1)...(x-k+1)/k! as a polynomial in real x.
double binom_real(double x, unsigned k);
long double binom_real(long double x, unsigned k);
Rational binom_real(const Rational& x, unsigned k);

/// The unique x >= 1 with binom_real(x + h - 1, h) == r, to relative 1e-12.
/// Throws std::domain_error for r < 1 or h < 1.
double invert_binom(double r, unsigned h);

/// Integer j >= 1 with C(j + h - 1, h) == r, if one exists.
std::optional<std::int64_t> exact_binom_root(Wide r, unsigned h);

/// Relative slack granted to a floating-point bound before it counts as
/// violated.
inline constexpr double kBoundSlack = 1e-9;

struct BoundCheck {
  std::string name;
  unsigned h = 0;
  std::uint64_t measured = 0;
  double bound = 0.0;
  std::optional<Wide> exact_bound;  // set when decided in integer arithmetic
  bool holds = false;
  bool equality = false;  // measured == exact_bound
  double slack() const { return bound - static_cast<double>(measured); }
};

/// x_h with |hA| = binom_real(x_h + h - 1, h).
struct BinomRoot {
  unsigned h = 0;
  double x = 0.0;
  std::optional<std::int64_t> integral;
};

struct BoundReport {
  std::vector<std::uint64_t> sizes;
  std::vector<BinomRoot> roots;  // h = 2 .. H
  std::vector<BoundCheck> checks;

  bool all_hold() const;
  const BoundCheck* find(const std::string& name, unsigned h) const;
  /// x from |2A| = binom_real(x + 1, 2).
  double x() const { return roots.empty() ? 0.0 : roots.front().x; }
};

/// Evaluates every sumset inequality up to H >= 3:
///   trivial-lower, trivial-upper    |A| <= |2A| <= C(|A|+1, 2)
///   multiset-count h                |hA| <= C(|A|+h-1, h)
///   monotone h                      |hA| <= |(h+1)A|
///   plunnecke h (h >= 3)            |hA| <= K^h |A|
///   ruzsa h                         |(h+1)A| <= |hA|^{(h+1)/h}
///   macaulay h                      |(h+1)A| <= binom_real(x_h + h, h+1)
///   macaulay-equality h             for integral x_h: equality iff (h+1)-dissociated
///   kruskal-katona                  |3A| <= (sqrt 2 / 3)|2A|^{3/2} + 2|2A|
BoundReport bound_suite(const PointSet& a, unsigned max_h);

}  // namespace sumset
