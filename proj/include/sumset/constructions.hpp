#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumset/point_set.hpp"

namespace sumset {

enum class Family { geometric, ruzsa, random, gap, higher };

std::string family_name(Family f);
/// Throws std::invalid_argument on an unknown name.
Family parse_family(const std::string& name);

struct ConstructionParams {
  Family family = Family::geometric;
  std::int64_t size = 10;  // geometric: number of terms
  std::int64_t base = 3;   // geometric: ratio
  std::int64_t m = 1;      // cube side
  double K = 1.0;          // target doubling
  double p = 1.0;          // inclusion probability
  std::uint64_t seed = 0;
  std::int64_t k = 1;  // GAP digit bound
  std::int64_t d = 1;  // GAP dimension
  unsigned h = 2;
  double alpha = 1.0;
};

/// A generated set together with everything needed to reproduce it.
struct Construction {
  ConstructionParams params;
  PointSet set{GroupSpec::integers(1)};
  std::optional<double> spline_target;       // sqrt(K m^3) or K^{1/2} k^{3d/2}
  std::optional<std::int64_t> spline_length; // realized L
  std::optional<double> modulus_target;      // (p K m^3)^{1/2} or (alpha m^{h+1})^{1/h}
  std::optional<std::int64_t> modulus;       // realized n
  std::vector<std::pair<std::string, PointSet>> parts;  // X, Y, P as applicable

  const PointSet* part(const std::string& name) const;
};

/// {base^0, ..., base^{n-1}} in Z.
Construction gen_geometric(std::int64_t n, std::int64_t base = 3);

/// Cube [0, m)^3 plus three axis splines of length L = ceil(sqrt(K m^3)) in Z^3.
Construction gen_ruzsa(std::int64_t m, double K);

/// (Z/nZ)^3 with n the least multiple of m at or above (p K m^3)^{1/2}:
/// a p-random subset of the m-torsion subgroup plus the three coordinate lines.
Construction gen_random(std::int64_t m, double p, double K, std::uint64_t seed);

/// P = base-3k integers with d digits below k; X = P^3 plus splines of
/// length L = ceil(K^{1/2} k^{3d/2}) in Z^3.
Construction gen_gap(std::int64_t k, std::int64_t d, double K);

/// (Z/nZ)^{h+1} with n = (alpha m^{h+1})^{1/h}: the m-torsion subgroup plus
/// the h+1 coordinate lines. n must be an integer divisible by m.
Construction gen_higher(unsigned h, std::int64_t m, double alpha);

Construction generate(const ConstructionParams& params);

/// Least integer L >= 0 with L^2 >= t.
std::int64_t ceil_sqrt(long double t);

}  // namespace sumset
