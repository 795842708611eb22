#include "sumset/constructions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sumset/rng.hpp"

namespace sumset {
namespace {

// Tolerance for range checks on real-valued parameters.
constexpr long double kRangeEps = 1e-12L;

bool within(long double lo, long double v, long double hi) {
  const long double tol = kRangeEps * std::max({1.0L, std::fabs(lo), std::fabs(hi)});
  return v >= lo - tol && v <= hi + tol;
}

std::int64_t checked_ipow(std::int64_t b, std::int64_t e, const char* what) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, b, &r)) throw std::overflow_error(std::string(what) + " overflows 64-bit coordinates");
  }
  return r;
}

// Sums of up to a few elements must stay representable.
constexpr std::int64_t kCoordLimit = std::numeric_limits<std::int64_t>::max() / 64;

void add_splines(std::vector<std::int64_t>& flat, std::size_t dim, std::int64_t length) {
  for (std::size_t axis = 0; axis < dim; ++axis) {
    for (std::int64_t x = 0; x < length; ++x) {
      for (std::size_t c = 0; c < dim; ++c) flat.push_back(c == axis ? x : 0);
    }
  }
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::geometric: return "geometric";
    case Family::ruzsa: return "ruzsa";
    case Family::random: return "random";
    case Family::gap: return "gap";
    case Family::higher: return "higher";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (auto f : {Family::geometric, Family::ruzsa, Family::random, Family::gap, Family::higher}) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

const PointSet* Construction::part(const std::string& name) const {
  for (const auto& [n, s] : parts) {
    if (n == name) return &s;
  }
  return nullptr;
}

std::int64_t ceil_sqrt(long double t) {
  if (t <= 0) return 0;
  auto l = static_cast<std::int64_t>(std::ceil(std::sqrt(t)));
  while (l > 0 && static_cast<long double>(l - 1) * static_cast<long double>(l - 1) >= t) --l;
  while (static_cast<long double>(l) * static_cast<long double>(l) < t) ++l;
  return l;
}

Construction gen_geometric(std::int64_t n, std::int64_t base) {
  if (n < 1) throw std::invalid_argument("geometric progression needs n >= 1");
  if (base < 3) throw std::invalid_argument("geometric progression needs base >= 3");
  std::vector<std::int64_t> flat;
  std::int64_t v = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    if (v > kCoordLimit) throw std::overflow_error("geometric progression overflows 64-bit coordinates");
    flat.push_back(v);
    if (i + 1 < n && __builtin_mul_overflow(v, base, &v)) {
      throw std::overflow_error("geometric progression overflows 64-bit coordinates");
    }
  }
  Construction c;
  c.params.family = Family::geometric;
  c.params.size = n;
  c.params.base = base;
  c.set = PointSet::from_flat(GroupSpec::integers(1), std::move(flat));
  return c;
}

Construction gen_ruzsa(std::int64_t m, double K) {
  if (m < 1) throw std::invalid_argument("ruzsa construction needs m >= 1");
  const long double m3 = static_cast<long double>(m) * m * m;
  if (!within(static_cast<long double>(m), K, m3)) throw std::invalid_argument("ruzsa construction needs m <= K <= m^3");
  const long double t = static_cast<long double>(K) * m3;
  const std::int64_t length = ceil_sqrt(t);
  if (length > kCoordLimit || m > kCoordLimit) throw std::overflow_error("ruzsa construction overflows");

  std::vector<std::int64_t> cube;
  for (std::int64_t x = 0; x < m; ++x)
    for (std::int64_t y = 0; y < m; ++y)
      for (std::int64_t z = 0; z < m; ++z) cube.insert(cube.end(), {x, y, z});
  std::vector<std::int64_t> splines;
  add_splines(splines, 3, length);

  Construction c;
  c.params.family = Family::ruzsa;
  c.params.m = m;
  c.params.K = K;
  c.spline_target = static_cast<double>(std::sqrt(t));
  c.spline_length = length;
  const GroupSpec g = GroupSpec::integers(3);
  PointSet x = PointSet::from_flat(g, std::move(cube));
  PointSet y = PointSet::from_flat(g, std::move(splines));
  c.set = x.set_union(y);
  c.parts = {{"X", std::move(x)}, {"Y", std::move(y)}};
  return c;
}

Construction gen_random(std::int64_t m, double p, double K, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("random construction needs m >= 1");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("random construction needs 0 < p <= 1");
  const long double m3 = static_cast<long double>(m) * m * m;
  if (!within(static_cast<long double>(m) / p, K, static_cast<long double>(p) * m3)) {
    throw std::invalid_argument("random construction needs m/p <= K <= p m^3");
  }
  const long double target = std::sqrt(static_cast<long double>(p) * K * m3);
  auto blocks = static_cast<std::int64_t>(std::ceil(target / static_cast<long double>(m) - 1e-9L));
  const std::int64_t n = std::max<std::int64_t>(1, blocks) * m;
  if (n < m) throw std::invalid_argument("random construction: n < m");
  if (n < 2) throw std::invalid_argument("random construction: ambient modulus below 2");
  if (n > (std::int64_t{1} << 40)) throw std::overflow_error("random construction modulus too large");

  const std::int64_t step = n / m;
  std::vector<std::int64_t> xs;
  std::uint64_t index = 0;
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 0; j < m; ++j)
      for (std::int64_t k = 0; k < m; ++k, ++index) {
        SplitMix64 stream = SplitMix64::derive(seed, index);
        if (stream.uniform01() < p) xs.insert(xs.end(), {i * step, j * step, k * step});
      }
  std::vector<std::int64_t> ys;
  add_splines(ys, 3, n);

  Construction c;
  c.params.family = Family::random;
  c.params.m = m;
  c.params.p = p;
  c.params.K = K;
  c.params.seed = seed;
  c.modulus_target = static_cast<double>(target);
  c.modulus = n;
  const GroupSpec g = GroupSpec::cyclic(n, 3);
  PointSet x = PointSet::from_flat(g, std::move(xs));
  PointSet y = PointSet::from_flat(g, std::move(ys));
  c.set = x.set_union(y);
  c.parts = {{"X", std::move(x)}, {"Y", std::move(y)}};
  return c;
}

Construction gen_gap(std::int64_t k, std::int64_t d, double K) {
  if (k < 1 || d < 1) throw std::invalid_argument("GAP construction needs k >= 1 and d >= 1");
  const std::int64_t kd = checked_ipow(k, d, "GAP construction");
  const std::int64_t k3d = checked_ipow(kd, 3, "GAP construction");
  if (!within(static_cast<long double>(kd), K, static_cast<long double>(k3d))) {
    throw std::invalid_argument("GAP construction needs k^d <= K <= k^{3d}");
  }
  const std::int64_t radix = 3 * k;
  const std::int64_t top = checked_ipow(radix, d, "GAP construction");
  if (top > kCoordLimit) throw std::overflow_error("GAP construction overflows 64-bit coordinates");

  std::vector<std::int64_t> digits(static_cast<std::size_t>(d), 0);
  std::vector<std::int64_t> pf;
  for (;;) {
    std::int64_t v = 0;
    for (std::int64_t i = d; i-- > 0;) v = v * radix + digits[static_cast<std::size_t>(i)];
    pf.push_back(v);
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == k) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  const long double t = static_cast<long double>(K) * static_cast<long double>(k3d);
  const std::int64_t length = ceil_sqrt(t);
  if (length > kCoordLimit) throw std::overflow_error("GAP spline overflows 64-bit coordinates");

  PointSet p = PointSet::from_flat(GroupSpec::integers(1), pf);
  std::vector<std::int64_t> xf;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      for (std::size_t e = 0; e < p.size(); ++e) xf.insert(xf.end(), {p.at(a)[0], p.at(b)[0], p.at(e)[0]});
  std::vector<std::int64_t> yf;
  add_splines(yf, 3, length);

  Construction c;
  c.params.family = Family::gap;
  c.params.k = k;
  c.params.d = d;
  c.params.K = K;
  c.spline_target = static_cast<double>(std::sqrt(t));
  c.spline_length = length;
  const GroupSpec g = GroupSpec::integers(3);
  PointSet x = PointSet::from_flat(g, std::move(xf));
  PointSet y = PointSet::from_flat(g, std::move(yf));
  c.set = x.set_union(y);
  c.parts = {{"P", std::move(p)}, {"X", std::move(x)}, {"Y", std::move(y)}};
  return c;
}

Construction gen_higher(unsigned h, std::int64_t m, double alpha) {
  if (h < 2) throw std::invalid_argument("higher construction needs h >= 2");
  if (m < 1) throw std::invalid_argument("higher construction needs m >= 1");
  const long double lo = std::pow(static_cast<long double>(m), static_cast<long double>(h - 1));
  const long double hi = std::pow(static_cast<long double>(m), static_cast<long double>(h * h - 1));
  if (!within(lo, alpha, hi)) throw std::invalid_argument("higher construction needs m^{h-1} <= alpha <= m^{h^2-1}");
  const long double volume = static_cast<long double>(alpha) * std::pow(static_cast<long double>(m), h + 1.0L);
  const long double target = std::pow(volume, 1.0L / h);
  const auto n = static_cast<std::int64_t>(std::llround(target));
  const long double nh = std::pow(static_cast<long double>(n), static_cast<long double>(h));
  if (n < 1 || std::fabs(nh - volume) > 1e-9L * volume) {
    throw std::invalid_argument("higher construction: (alpha m^{h+1})^{1/h} is not an integer");
  }
  if (n % m != 0) throw std::invalid_argument("higher construction: m does not divide n");
  if (n < 2) throw std::invalid_argument("higher construction: ambient modulus below 2");
  const std::size_t dim = h + 1;
  if (std::pow(static_cast<long double>(m), static_cast<long double>(dim)) > 5e7L) {
    throw std::invalid_argument("higher construction: subgroup too large to enumerate");
  }

  const std::int64_t step = n / m;
  std::vector<std::int64_t> xf;
  std::vector<std::int64_t> digits(dim, 0);
  for (;;) {
    for (auto v : digits) xf.push_back(v * step);
    std::size_t i = dim;
    while (i-- > 0) {
      if (++digits[i] < m) break;
      digits[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  std::vector<std::int64_t> yf;
  add_splines(yf, dim, n);

  Construction c;
  c.params.family = Family::higher;
  c.params.h = h;
  c.params.m = m;
  c.params.alpha = alpha;
  c.modulus_target = static_cast<double>(target);
  c.modulus = n;
  const GroupSpec g = GroupSpec::cyclic(n, dim);
  PointSet x = PointSet::from_flat(g, std::move(xf));
  PointSet y = PointSet::from_flat(g, std::move(yf));
  c.set = x.set_union(y);
  c.parts = {{"X", std::move(x)}, {"Y", std::move(y)}};
  return c;
}

Construction generate(const ConstructionParams& p) {
  switch (p.family) {
    case Family::geometric: return gen_geometric(p.size, p.base);
    case Family::ruzsa: return gen_ruzsa(p.m, p.K);
    case Family::random: return gen_random(p.m, p.p, p.K, p.seed);
    case Family::gap: return gen_gap(p.k, p.d, p.K);
    case Family::higher: return gen_higher(p.h, p.m, p.alpha);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace sumset
