#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sumset/group.hpp"

namespace sumset {

/// A finite set of canonical elements of one group, deduplicated and kept in
/// lex_compare order. Coordinates are stored flat, `dim()` per element, so
/// index order is element order.
class PointSet {
 public:
  explicit PointSet(GroupSpec group) : group_(std::move(group)) {}
  /// Canonicalizes, sorts and deduplicates.
  PointSet(GroupSpec group, const std::vector<Element>& elements);

  /// Canonicalizes, sorts and deduplicates a flat coordinate buffer.
  static PointSet from_flat(GroupSpec group, std::vector<std::int64_t> flat);
  /// Buffer must already be canonical, strictly increasing and unique.
  static PointSet from_sorted_flat(GroupSpec group, std::vector<std::int64_t> flat);

  const GroupSpec& group() const { return group_; }
  std::size_t dim() const { return group_.dim(); }
  std::size_t size() const { return flat_.size() / group_.dim(); }
  bool empty() const { return flat_.empty(); }

  std::span<const std::int64_t> at(std::size_t i) const {
    return std::span<const std::int64_t>(flat_).subspan(i * dim(), dim());
  }
  Element element(std::size_t i) const;
  std::vector<Element> elements() const;
  const std::vector<std::int64_t>& flat() const { return flat_; }

  std::optional<std::size_t> index_of(std::span<const std::int64_t> coords) const;
  bool contains(const Element& e) const { return index_of(e.coords()).has_value(); }
  bool is_subset_of(const PointSet& other) const;

  /// Elements at the given indices (any order, duplicates ignored).
  PointSet subset(std::span<const std::size_t> indices) const;
  /// Elements whose bit is set in `mask` (|A| <= 64).
  PointSet subset_mask(std::uint64_t mask) const;
  /// Elements of this set that are not in `other`.
  PointSet difference(const PointSet& other) const;
  PointSet set_union(const PointSet& other) const;

  /// Per-coordinate minimum and maximum; empty set gives empty vectors.
  std::vector<std::int64_t> lower_bounds() const;
  std::vector<std::int64_t> upper_bounds() const;

  bool operator==(const PointSet&) const = default;

 private:
  PointSet(GroupSpec group, std::vector<std::int64_t> flat, bool) : group_(std::move(group)), flat_(std::move(flat)) {}

  GroupSpec group_;
  std::vector<std::int64_t> flat_;
};

/// Sorts a flat buffer of `dim`-coordinate records lexicographically and
/// removes duplicates; returns the number of records removed.
std::size_t sort_unique_flat(std::vector<std::int64_t>& flat, std::size_t dim);

}  // namespace sumset
