#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "sumset/group.hpp"

namespace sumset {

/// Open-addressing hash set of 64-bit keys. The all-ones key is reserved.
class FlatKeySet {
 public:
  explicit FlatKeySet(std::size_t expected = 16);
  bool insert(std::uint64_t key);
  bool contains(std::uint64_t key) const;
  std::size_t size() const { return size_; }
  std::vector<std::uint64_t> keys() const;

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
  void grow();
  std::size_t slot(std::uint64_t key) const;

  std::vector<std::uint64_t> slots_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

/// Membership table for group elements whose coordinates lie in known
/// per-coordinate ranges. When the product of the ranges fits in 64 bits the
/// coordinates are packed into an order-preserving integer key (most
/// significant coordinate first), so sorting keys sorts elements in
/// lex_compare order. Otherwise it falls back to hashing coordinate vectors.
class ElementTable {
 public:
  /// `lo`/`hi` bound the infinite coordinates (inclusive); finite coordinates
  /// always use [0, n).
  ElementTable(const GroupSpec& group, std::span<const std::int64_t> lo, std::span<const std::int64_t> hi,
               std::size_t expected = 16);

  /// True when `coords` was not present before.
  bool insert(std::span<const std::int64_t> coords);
  bool contains(std::span<const std::int64_t> coords) const;
  std::size_t size() const;
  bool packed() const { return packed_; }

  /// All inserted elements, flat, in lex_compare order.
  std::vector<std::int64_t> sorted_flat() const;

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept;
  };

  std::uint64_t encode(std::span<const std::int64_t> coords) const;
  void decode(std::uint64_t key, std::span<std::int64_t> out) const;

  std::size_t dim_;
  bool packed_ = false;
  std::vector<std::int64_t> offset_;
  std::vector<std::uint64_t> radix_;
  std::vector<std::uint64_t> stride_;
  FlatKeySet keys_;
  std::unordered_set<std::vector<std::int64_t>, VecHash> fallback_;
};

/// Range of a + b for a in [alo, ahi], b in [blo, bhi] on the infinite
/// coordinates of `g`; throws std::overflow_error if it leaves int64.
void sum_bounds(const GroupSpec& g, std::span<const std::int64_t> alo, std::span<const std::int64_t> ahi,
                std::span<const std::int64_t> blo, std::span<const std::int64_t> bhi, std::vector<std::int64_t>& lo,
                std::vector<std::int64_t>& hi);

}  // namespace sumset
