#include "sumset/point_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sumset {

std::size_t sort_unique_flat(std::vector<std::int64_t>& flat, std::size_t dim) {
  const std::size_t n = flat.size() / dim;
  if (dim == 1) {
    std::sort(flat.begin(), flat.end());
    auto last = std::unique(flat.begin(), flat.end());
    std::size_t removed = static_cast<std::size_t>(flat.end() - last);
    flat.erase(last, flat.end());
    return removed;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto rec = [&](std::size_t i) { return std::span<const std::int64_t>(flat).subspan(i * dim, dim); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lex_compare(rec(a), rec(b)) < 0; });
  std::vector<std::int64_t> out;
  out.reserve(flat.size());
  std::size_t kept = 0;
  for (std::size_t k = 0; k < n; ++k) {
    auto r = rec(order[k]);
    if (kept > 0 && lex_compare(std::span<const std::int64_t>(out).subspan((kept - 1) * dim, dim), r) == 0) continue;
    out.insert(out.end(), r.begin(), r.end());
    ++kept;
  }
  flat = std::move(out);
  return n - kept;
}

PointSet::PointSet(GroupSpec group, const std::vector<Element>& elements) : group_(std::move(group)) {
  flat_.reserve(elements.size() * dim());
  for (const auto& e : elements) {
    if (e.dim() != dim()) throw std::invalid_argument("element dimension does not match group");
    flat_.insert(flat_.end(), e.coords().begin(), e.coords().end());
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    group_.canonicalize(std::span<std::int64_t>(flat_).subspan(i * dim(), dim()));
  }
  sort_unique_flat(flat_, dim());
}

PointSet PointSet::from_flat(GroupSpec group, std::vector<std::int64_t> flat) {
  const std::size_t d = group.dim();
  if (flat.size() % d != 0) throw std::invalid_argument("flat buffer is not a multiple of the dimension");
  for (std::size_t i = 0; i < flat.size() / d; ++i) {
    group.canonicalize(std::span<std::int64_t>(flat).subspan(i * d, d));
  }
  sort_unique_flat(flat, d);
  return PointSet(std::move(group), std::move(flat), true);
}

PointSet PointSet::from_sorted_flat(GroupSpec group, std::vector<std::int64_t> flat) {
  return PointSet(std::move(group), std::move(flat), true);
}

Element PointSet::element(std::size_t i) const {
  auto c = at(i);
  return Element(std::vector<std::int64_t>(c.begin(), c.end()));
}

std::vector<Element> PointSet::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(element(i));
  return out;
}

std::optional<std::size_t> PointSet::index_of(std::span<const std::int64_t> coords) const {
  if (coords.size() != dim()) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto c = lex_compare(at(mid), coords);
    if (c == 0) return mid;
    if (c < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return std::nullopt;
}

bool PointSet::is_subset_of(const PointSet& other) const {
  if (!(group_ == other.group_)) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!other.index_of(at(i))) return false;
  }
  return true;
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
  std::vector<std::size_t> idx(indices.begin(), indices.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<std::int64_t> flat;
  flat.reserve(idx.size() * dim());
  for (auto i : idx) {
    if (i >= size()) throw std::out_of_range("subset index out of range");
    auto c = at(i);
    flat.insert(flat.end(), c.begin(), c.end());
  }
  return PointSet(group_, std::move(flat), true);
}

PointSet PointSet::subset_mask(std::uint64_t mask) const {
  std::vector<std::int64_t> flat;
  for (std::size_t i = 0; i < size() && i < 64; ++i) {
    if (mask >> i & 1U) {
      auto c = at(i);
      flat.insert(flat.end(), c.begin(), c.end());
    }
  }
  return PointSet(group_, std::move(flat), true);
}

PointSet PointSet::difference(const PointSet& other) const {
  std::vector<std::int64_t> flat;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!other.index_of(at(i))) {
      auto c = at(i);
      flat.insert(flat.end(), c.begin(), c.end());
    }
  }
  return PointSet(group_, std::move(flat), true);
}

PointSet PointSet::set_union(const PointSet& other) const {
  if (!(group_ == other.group_)) throw std::invalid_argument("group mismatch");
  std::vector<std::int64_t> flat = flat_;
  flat.insert(flat.end(), other.flat_.begin(), other.flat_.end());
  sort_unique_flat(flat, dim());
  return PointSet(group_, std::move(flat), true);
}

std::vector<std::int64_t> PointSet::lower_bounds() const {
  if (empty()) return {};
  std::vector<std::int64_t> lo(at(0).begin(), at(0).end());
  for (std::size_t i = 1; i < size(); ++i) {
    auto c = at(i);
    for (std::size_t j = 0; j < dim(); ++j) lo[j] = std::min(lo[j], c[j]);
  }
  return lo;
}

std::vector<std::int64_t> PointSet::upper_bounds() const {
  if (empty()) return {};
  std::vector<std::int64_t> hi(at(0).begin(), at(0).end());
  for (std::size_t i = 1; i < size(); ++i) {
    auto c = at(i);
    for (std::size_t j = 0; j < dim(); ++j) hi[j] = std::max(hi[j], c[j]);
  }
  return hi;
}

}  // namespace sumset
