#include "sumset/element_table.hpp"

#include <algorithm>
#include <stdexcept>

#include "sumset/point_set.hpp"

namespace sumset {
namespace {

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

FlatKeySet::FlatKeySet(std::size_t expected) {
  std::size_t cap = 16;
  while (cap < expected * 2) cap <<= 1;
  slots_.assign(cap, kEmpty);
  mask_ = cap - 1;
}

std::size_t FlatKeySet::slot(std::uint64_t key) const {
  std::size_t i = mix(key) & mask_;
  while (slots_[i] != kEmpty && slots_[i] != key) i = (i + 1) & mask_;
  return i;
}

bool FlatKeySet::insert(std::uint64_t key) {
  std::size_t i = slot(key);
  if (slots_[i] == key) return false;
  slots_[i] = key;
  if (++size_ * 2 > slots_.size()) grow();
  return true;
}

bool FlatKeySet::contains(std::uint64_t key) const { return slots_[slot(key)] == key; }

void FlatKeySet::grow() {
  std::vector<std::uint64_t> old = std::move(slots_);
  slots_.assign(old.size() * 2, kEmpty);
  mask_ = slots_.size() - 1;
  for (auto k : old) {
    if (k != kEmpty) slots_[slot(k)] = k;
  }
}

std::vector<std::uint64_t> FlatKeySet::keys() const {
  std::vector<std::uint64_t> out;
  out.reserve(size_);
  for (auto k : slots_) {
    if (k != kEmpty) out.push_back(k);
  }
  return out;
}

std::size_t ElementTable::VecHash::operator()(const std::vector<std::int64_t>& v) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto c : v) h = mix(h ^ static_cast<std::uint64_t>(c));
  return static_cast<std::size_t>(h);
}

ElementTable::ElementTable(const GroupSpec& group, std::span<const std::int64_t> lo,
                           std::span<const std::int64_t> hi, std::size_t expected)
    : dim_(group.dim()), offset_(dim_), radix_(dim_), stride_(dim_), keys_(1) {
  unsigned __int128 total = 1;
  packed_ = true;
  for (std::size_t i = 0; i < dim_; ++i) {
    unsigned __int128 r;
    if (group.is_finite(i)) {
      offset_[i] = 0;
      r = static_cast<unsigned __int128>(group.modulus(i));
    } else {
      if (lo.size() != dim_ || hi.size() != dim_ || lo[i] > hi[i]) throw std::invalid_argument("bad element bounds");
      offset_[i] = lo[i];
      r = static_cast<unsigned __int128>(static_cast<__int128>(hi[i]) - lo[i] + 1);
    }
    total *= r;
    // one key value stays reserved as the empty marker
    if (r > ~std::uint64_t{0} || total >= static_cast<unsigned __int128>(~std::uint64_t{0})) {
      packed_ = false;
      break;
    }
    radix_[i] = static_cast<std::uint64_t>(r);
  }
  if (packed_) {
    std::uint64_t s = 1;
    for (std::size_t i = dim_; i-- > 0;) {
      stride_[i] = s;
      s *= radix_[i];
    }
    keys_ = FlatKeySet(expected);
  } else {
    fallback_.reserve(expected);
  }
}

std::uint64_t ElementTable::encode(std::span<const std::int64_t> coords) const {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    key += static_cast<std::uint64_t>(coords[i] - offset_[i]) * stride_[i];
  }
  return key;
}

void ElementTable::decode(std::uint64_t key, std::span<std::int64_t> out) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    out[i] = static_cast<std::int64_t>(key / stride_[i]) + offset_[i];
    key %= stride_[i];
  }
}

bool ElementTable::insert(std::span<const std::int64_t> coords) {
  if (packed_) return keys_.insert(encode(coords));
  return fallback_.emplace(coords.begin(), coords.end()).second;
}

bool ElementTable::contains(std::span<const std::int64_t> coords) const {
  if (packed_) return keys_.contains(encode(coords));
  return fallback_.count(std::vector<std::int64_t>(coords.begin(), coords.end())) > 0;
}

std::size_t ElementTable::size() const { return packed_ ? keys_.size() : fallback_.size(); }

std::vector<std::int64_t> ElementTable::sorted_flat() const {
  std::vector<std::int64_t> flat;
  if (packed_) {
    auto keys = keys_.keys();
    std::sort(keys.begin(), keys.end());
    flat.resize(keys.size() * dim_);
    for (std::size_t k = 0; k < keys.size(); ++k) {
      decode(keys[k], std::span<std::int64_t>(flat).subspan(k * dim_, dim_));
    }
    return flat;
  }
  flat.reserve(fallback_.size() * dim_);
  for (const auto& v : fallback_) flat.insert(flat.end(), v.begin(), v.end());
  sort_unique_flat(flat, dim_);
  return flat;
}

void sum_bounds(const GroupSpec& g, std::span<const std::int64_t> alo, std::span<const std::int64_t> ahi,
                std::span<const std::int64_t> blo, std::span<const std::int64_t> bhi, std::vector<std::int64_t>& lo,
                std::vector<std::int64_t>& hi) {
  lo.assign(g.dim(), 0);
  hi.assign(g.dim(), 0);
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (g.is_finite(i)) {
      hi[i] = g.modulus(i) - 1;
      continue;
    }
    if (__builtin_add_overflow(alo[i], blo[i], &lo[i]) || __builtin_add_overflow(ahi[i], bhi[i], &hi[i])) {
      throw std::overflow_error("sum leaves the 64-bit coordinate range");
    }
  }
}

}  // namespace sumset
