#pragma once

#include <cstdint>
#include <vector>

#include "sumset/point_set.hpp"
#include "sumset/rational.hpp"

namespace sumset {

/// {a + b : a in A, b in B}. Throws std::invalid_argument on group mismatch
/// or an empty operand.
PointSet sumset(const PointSet& a, const PointSet& b);

/// hA for h >= 1, built as ((A + A) + A) ... with deduplication at each stage.
PointSet iterated_sumset(const PointSet& a, unsigned h);

/// Cardinalities |A|, |2A|, ..., |HA| with the exact ratios K = |2A|/|A|
/// and alpha_h = |hA|/|A| (alpha[0] is alpha_1 = 1).
struct SumsetProfile {
  std::vector<std::uint64_t> sizes;
  Rational K;
  std::vector<Rational> alpha;

  std::uint64_t size(unsigned h) const { return sizes.at(h - 1); }
  unsigned max_h() const { return static_cast<unsigned>(sizes.size()); }
};

SumsetProfile profile(const PointSet& a, unsigned max_h);

/// All h-fold sums distinct, i.e. |hA| = C(|A| + h - 1, h).
bool is_dissociated(const PointSet& a, unsigned h);

}  // namespace sumset
