#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "sumset/group.hpp"
#include "sumset/point_set.hpp"
#include "sumset/rng.hpp"

namespace testing {

using sumset::Element;
using sumset::GroupSpec;
using sumset::PointSet;

inline PointSet ints(std::initializer_list<std::int64_t> values) {
  std::vector<Element> e;
  for (auto v : values) e.push_back(Element{v});
  return PointSet(GroupSpec::integers(1), e);
}

inline PointSet ints(const std::vector<std::int64_t>& values) {
  std::vector<Element> e;
  for (auto v : values) e.push_back(Element{v});
  return PointSet(GroupSpec::integers(1), e);
}

/// Subset of {0, ..., width-1} from a bit mask.
inline PointSet from_mask(std::uint32_t mask, int width) {
  std::vector<std::int64_t> v;
  for (int i = 0; i < width; ++i) {
    if ((mask >> i) & 1) v.push_back(i);
  }
  return ints(v);
}

/// hA by enumerating every h-tuple of elements.
inline std::set<std::vector<std::int64_t>> brute_iterated(const PointSet& a, unsigned h) {
  std::set<std::vector<std::int64_t>> out;
  const auto& g = a.group();
  std::vector<std::size_t> idx(h, 0);
  const std::size_t n = a.size();
  for (;;) {
    std::vector<std::int64_t> s(a.dim(), 0);
    for (auto i : idx) {
      for (std::size_t k = 0; k < a.dim(); ++k) s[k] += a.at(i)[k];
    }
    g.canonicalize(s);
    out.insert(s);
    std::size_t p = 0;
    while (p < h && ++idx[p] == n) idx[p++] = 0;
    if (p == h) break;
  }
  return out;
}

inline std::set<std::vector<std::int64_t>> as_set(const PointSet& a) {
  std::set<std::vector<std::int64_t>> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.insert({a.at(i).begin(), a.at(i).end()});
  return out;
}

/// Up to size_max random elements; infinite coordinates drawn from [-span, span].
inline PointSet random_set(const GroupSpec& g, std::size_t size_max, std::int64_t span, sumset::SplitMix64& rng) {
  const std::size_t size = 1 + rng.below(size_max);
  std::vector<Element> e;
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<std::int64_t> c(g.dim());
    for (std::size_t k = 0; k < g.dim(); ++k) {
      c[k] = g.is_finite(k) ? rng.between(0, g.modulus(k) - 1) : rng.between(-span, span);
    }
    e.emplace_back(c);
  }
  return PointSet(g, e);
}

}  // namespace testing
