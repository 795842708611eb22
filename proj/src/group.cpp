#include "sumset/group.hpp"

#include <stdexcept>

namespace sumset {

GroupSpec::GroupSpec(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw std::invalid_argument("group needs at least one coordinate");
  for (auto n : moduli_) {
    if (n < 0 || n == 1) {
      throw std::invalid_argument("modulus must be 0 (Z) or at least 2, got " + std::to_string(n));
    }
  }
}

bool GroupSpec::is_finite() const {
  for (auto n : moduli_) {
    if (n == 0) return false;
  }
  return true;
}

std::optional<Wide> GroupSpec::order() const {
  Wide r = 1;
  for (auto n : moduli_) {
    if (n == 0) return std::nullopt;
    auto next = checked_mul(r, n);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

void GroupSpec::canonicalize(std::span<std::int64_t> coords) const {
  if (coords.size() != moduli_.size()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (moduli_[i] != 0) coords[i] = floor_mod(coords[i], moduli_[i]);
  }
}

bool GroupSpec::is_canonical(std::span<const std::int64_t> coords) const {
  if (coords.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (moduli_[i] != 0 && (coords[i] < 0 || coords[i] >= moduli_[i])) return false;
  }
  return true;
}

std::string GroupSpec::directive() const {
  std::string s = "#group";
  for (auto n : moduli_) s += " " + std::to_string(n);
  return s;
}

Element Element::canonical(const GroupSpec& g) const {
  std::vector<std::int64_t> c = coords_;
  g.canonicalize(c);
  return Element(std::move(c));
}

std::string Element::str() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(coords_[i]);
  }
  return s;
}

Element add_canonical(const Element& a, const Element& b, const GroupSpec& g) {
  if (a.dim() != g.dim() || b.dim() != g.dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<std::int64_t> out(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    std::int64_t s;
    if (__builtin_add_overflow(a[i], b[i], &s)) {
      if (!g.is_finite(i)) throw std::overflow_error("coordinate overflow in Z");
      // canonical inputs are < n <= INT64_MAX, so this cannot happen
      throw std::overflow_error("coordinate overflow");
    }
    out[i] = g.is_finite(i) ? floor_mod(s, g.modulus(i)) : s;
  }
  return Element(std::move(out));
}

std::strong_ordering lex_compare(const Element& a, const Element& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  return lex_compare(a.coords(), b.coords());
}

}  // namespace sumset
