#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sumset/arith.hpp"

namespace sumset {

/// G = Z^{d0} x Z/n1 x ... x Z/nk, one modulus per coordinate.
/// A modulus of 0 is an infinite cyclic coordinate; n >= 2 is Z/nZ.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::int64_t> moduli);

  static GroupSpec integers(std::size_t dim) { return GroupSpec(std::vector<std::int64_t>(dim, 0)); }
  static GroupSpec cyclic(std::int64_t n, std::size_t dim) { return GroupSpec(std::vector<std::int64_t>(dim, n)); }

  std::size_t dim() const { return moduli_.size(); }
  std::int64_t modulus(std::size_t i) const { return moduli_[i]; }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  bool is_finite(std::size_t i) const { return moduli_[i] != 0; }
  bool is_finite() const;

  /// |G| when every coordinate is finite and the product fits.
  std::optional<Wide> order() const;

  /// Reduces every finite coordinate into [0, n).
  void canonicalize(std::span<std::int64_t> coords) const;
  bool is_canonical(std::span<const std::int64_t> coords) const;

  /// `#group n1 ... nd`
  std::string directive() const;

  bool operator==(const GroupSpec&) const = default;

 private:
  std::vector<std::int64_t> moduli_;
};

class Element {
 public:
  Element() = default;
  explicit Element(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  Element(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::span<const std::int64_t> coords() const { return coords_; }

  /// Canonical copy under `g`; throws on dimension mismatch.
  Element canonical(const GroupSpec& g) const;

  std::string str() const;

  bool operator==(const Element&) const = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// Componentwise sum reduced modulo each finite modulus. Throws
/// std::invalid_argument on dimension mismatch and std::overflow_error if
/// an infinite coordinate leaves the signed 64-bit range.
Element add_canonical(const Element& a, const Element& b, const GroupSpec& g);

/// Coordinatewise lexicographic order; throws on dimension mismatch.
std::strong_ordering lex_compare(const Element& a, const Element& b);

/// Same order on raw coordinate spans of equal length.
inline std::strong_ordering lex_compare(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

/// Reduces v into [0, n) for n >= 1.
inline std::int64_t floor_mod(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

}  // namespace sumset
