#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sumset/element_table.hpp"
#include "sumset/point_set.hpp"

namespace sumset::detail {

/// out = x + y reduced in g; inputs canonical.
inline void add_into(const GroupSpec& g, std::span<const std::int64_t> x, std::span<const std::int64_t> y,
                     std::span<std::int64_t> out) {
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::int64_t v = x[k] + y[k];
    if (g.is_finite(k) && v >= g.modulus(k)) v -= g.modulus(k);
    out[k] = v;
  }
}

/// Coordinate range of hA on the infinite coordinates.
inline void multiple_bounds(const PointSet& a, unsigned h, std::vector<std::int64_t>& lo,
                            std::vector<std::int64_t>& hi) {
  auto alo = a.lower_bounds();
  auto ahi = a.upper_bounds();
  lo.assign(a.dim(), 0);
  hi.assign(a.dim(), 0);
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (a.group().is_finite(k)) {
      hi[k] = a.group().modulus(k) - 1;
      continue;
    }
    const auto m = static_cast<std::int64_t>(h);
    if (__builtin_mul_overflow(alo[k], m, &lo[k]) || __builtin_mul_overflow(ahi[k], m, &hi[k])) {
      throw std::overflow_error("h-fold sum leaves the 64-bit coordinate range");
    }
  }
}

inline ElementTable table_for_multiple(const PointSet& a, unsigned h, std::size_t expected) {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;
  multiple_bounds(a, h, lo, hi);
  return ElementTable(a.group(), lo, hi, expected);
}

}  // namespace sumset::detail
