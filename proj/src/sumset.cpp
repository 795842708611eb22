#include "sumset/sumset.hpp"

#include <stdexcept>

#include "sumset/element_table.hpp"

namespace sumset {

PointSet sumset(const PointSet& a, const PointSet& b) {
  if (!(a.group() == b.group())) throw std::invalid_argument("sumset operands live in different groups");
  if (a.empty() || b.empty()) throw std::invalid_argument("sumset of an empty set");
  const GroupSpec& g = a.group();
  const std::size_t d = g.dim();

  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;
  sum_bounds(g, a.lower_bounds(), a.upper_bounds(), b.lower_bounds(), b.upper_bounds(), lo, hi);

  std::size_t expected = std::max(a.size(), b.size()) * 4;
  ElementTable table(g, lo, hi, expected);
  std::vector<std::int64_t> s(d);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto x = a.at(i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto y = b.at(j);
      for (std::size_t k = 0; k < d; ++k) {
        std::int64_t v = x[k] + y[k];
        if (g.is_finite(k) && v >= g.modulus(k)) v -= g.modulus(k);
        s[k] = v;
      }
      table.insert(s);
    }
  }
  return PointSet::from_sorted_flat(g, table.sorted_flat());
}

PointSet iterated_sumset(const PointSet& a, unsigned h) {
  if (h == 0) throw std::invalid_argument("iterated sumset needs h >= 1");
  if (a.empty()) throw std::invalid_argument("iterated sumset of an empty set");
  PointSet acc = a;
  for (unsigned j = 2; j <= h; ++j) acc = sumset(acc, a);
  return acc;
}

SumsetProfile profile(const PointSet& a, unsigned max_h) {
  if (max_h < 2) throw std::invalid_argument("profile needs H >= 2");
  if (a.empty()) throw std::invalid_argument("profile of an empty set");
  SumsetProfile p;
  PointSet acc = a;
  p.sizes.push_back(a.size());
  for (unsigned j = 2; j <= max_h; ++j) {
    acc = sumset(acc, a);
    p.sizes.push_back(acc.size());
  }
  const auto n = static_cast<Wide>(a.size());
  p.K = Rational(static_cast<Wide>(p.sizes[1]), n);
  for (auto s : p.sizes) p.alpha.emplace_back(static_cast<Wide>(s), n);
  return p;
}

bool is_dissociated(const PointSet& a, unsigned h) {
  if (h < 2) throw std::invalid_argument("dissociation order must be at least 2");
  if (a.empty()) throw std::invalid_argument("dissociation of an empty set");
  auto count = binomial(static_cast<std::int64_t>(a.size() + h - 1), h);
  const auto sums = iterated_sumset(a, h).size();
  return count && *count == static_cast<Wide>(sums);
}

}  // namespace sumset
