#include "sumset/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "sumset/multiset.hpp"

namespace sumset {

long double binom_real(long double x, unsigned k) {
  long double r = 1.0L;
  for (unsigned i = 0; i < k; ++i) r *= (x - static_cast<long double>(i)) / static_cast<long double>(i + 1);
  return r;
}

double binom_real(double x, unsigned k) {
  return static_cast<double>(binom_real(static_cast<long double>(x), k));
}

Rational binom_real(const Rational& x, unsigned k) {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) r = r * (x - Rational(static_cast<Wide>(i))) / Rational(static_cast<Wide>(i + 1));
  return r;
}

double invert_binom(double r, unsigned h) {
  if (h < 1) throw std::domain_error("invert_binom needs h >= 1");
  if (!(r >= 1.0)) throw std::domain_error("invert_binom needs r >= 1");
  const long double target = r;
  auto f = [h](long double x) { return binom_real(x + static_cast<long double>(h) - 1.0L, h); };
  long double lo = 1.0L;
  long double hi = 2.0L;
  while (f(hi) < target) {
    lo = hi;
    hi *= 2.0L;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-16L * hi; ++it) {
    long double mid = (lo + hi) / 2.0L;
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return static_cast<double>((lo + hi) / 2.0L);
}

std::optional<std::int64_t> exact_binom_root(Wide r, unsigned h) {
  if (r < 1 || h < 1) return std::nullopt;
  const auto guess = static_cast<std::int64_t>(std::llround(invert_binom(static_cast<double>(r), h)));
  for (std::int64_t j = std::max<std::int64_t>(1, guess - 2); j <= guess + 2; ++j) {
    auto c = binomial(j + static_cast<std::int64_t>(h) - 1, h);
    if (c && *c == r) return j;
  }
  return std::nullopt;
}

bool BoundReport::all_hold() const {
  for (const auto& c : checks) {
    if (!c.holds) return false;
  }
  return true;
}

const BoundCheck* BoundReport::find(const std::string& name, unsigned h) const {
  for (const auto& c : checks) {
    if (c.name == name && c.h == h) return &c;
  }
  return nullptr;
}

namespace {

BoundCheck exact_check(std::string name, unsigned h, std::uint64_t measured, Wide bound) {
  BoundCheck c;
  c.name = std::move(name);
  c.h = h;
  c.measured = measured;
  c.bound = static_cast<double>(bound);
  c.exact_bound = bound;
  c.holds = static_cast<Wide>(measured) <= bound;
  c.equality = static_cast<Wide>(measured) == bound;
  return c;
}

BoundCheck float_check(std::string name, unsigned h, std::uint64_t measured, long double bound) {
  BoundCheck c;
  c.name = std::move(name);
  c.h = h;
  c.measured = measured;
  c.bound = static_cast<double>(bound);
  c.holds = static_cast<long double>(measured) <= bound * (1.0L + kBoundSlack);
  return c;
}

// lhs^p <= rhs^q on nonnegative integers, exactly when it fits, otherwise on
// logarithms with the one-sided slack.
bool power_le(Wide lhs, unsigned p, Wide rhs, unsigned q) {
  auto l = checked_pow(lhs, p);
  auto r = checked_pow(rhs, q);
  if (l && r) return *l <= *r;
  const long double ll = p * std::log(static_cast<long double>(lhs));
  const long double rr = q * std::log(static_cast<long double>(rhs));
  return ll <= rr + kBoundSlack;
}

}  // namespace

BoundReport bound_suite(const PointSet& a, unsigned max_h) {
  if (max_h < 3) throw std::invalid_argument("bound suite needs H >= 3");
  if (a.empty()) throw std::invalid_argument("bound suite of an empty set");
  const SumsetProfile p = profile(a, max_h);
  BoundReport rep;
  rep.sizes = p.sizes;
  const auto n = static_cast<std::int64_t>(a.size());
  const auto size = [&](unsigned h) { return p.size(h); };
  const auto wide = [&](unsigned h) { return static_cast<Wide>(p.size(h)); };

  {
    BoundCheck lower = exact_check("trivial-lower", 2, size(2), wide(2));
    lower.measured = size(1);
    lower.holds = size(1) <= size(2);
    lower.equality = size(1) == size(2);
    rep.checks.push_back(lower);
  }
  for (unsigned h = 2; h <= max_h; ++h) {
    auto c = binomial(n + h - 1, h);
    std::string name = h == 2 ? "trivial-upper" : "multiset-count";
    if (c) {
      rep.checks.push_back(exact_check(name, h, size(h), *c));
    } else {
      rep.checks.push_back(float_check(name, h, size(h), binom_real(static_cast<long double>(n + h - 1), h)));
    }
  }
  for (unsigned h = 1; h < max_h; ++h) rep.checks.push_back(exact_check("monotone", h, size(h), wide(h + 1)));

  for (unsigned h = 3; h <= max_h; ++h) {
    // |hA| |A|^{h-1} <= |2A|^h
    const long double bound = std::pow(p.K.to_long_double(), static_cast<long double>(h)) * static_cast<long double>(n);
    BoundCheck c;
    c.name = "plunnecke";
    c.h = h;
    c.measured = size(h);
    c.bound = static_cast<double>(bound);
    bool decided = false;
    if (auto nh = checked_pow(n, h - 1)) {
      auto lhs = checked_mul(wide(h), *nh);
      auto rhs = checked_pow(wide(2), h);
      if (lhs && rhs) {
        c.holds = *lhs <= *rhs;
        c.equality = *lhs == *rhs;
        decided = true;
      }
    }
    if (!decided) c.holds = static_cast<long double>(size(h)) <= bound * (1.0L + kBoundSlack);
    rep.checks.push_back(c);
  }

  for (unsigned h = 2; h < max_h; ++h) {
    BoundCheck c;
    c.name = "ruzsa";
    c.h = h;
    c.measured = size(h + 1);
    c.bound = static_cast<double>(
        std::pow(static_cast<long double>(size(h)), static_cast<long double>(h + 1) / static_cast<long double>(h)));
    c.holds = power_le(wide(h + 1), h, wide(h), h + 1);
    rep.checks.push_back(c);
  }

  for (unsigned h = 2; h < max_h; ++h) {
    BinomRoot root;
    root.h = h;
    root.x = invert_binom(static_cast<double>(size(h)), h);
    root.integral = exact_binom_root(wide(h), h);
    rep.roots.push_back(root);

    if (root.integral) {
      auto bound = binomial(*root.integral + h, h + 1);
      if (bound) {
        BoundCheck c = exact_check("macaulay", h, size(h + 1), *bound);
        rep.checks.push_back(c);
        // Equality at integral x happens exactly for (h+1)-dissociated sets.
        auto dissociated_count = binomial(n + h, h + 1);
        const bool dissociated = dissociated_count && *dissociated_count == wide(h + 1);
        BoundCheck e = c;
        e.name = "macaulay-equality";
        e.holds = c.equality == dissociated;
        rep.checks.push_back(e);
        continue;
      }
    }
    rep.checks.push_back(
        float_check("macaulay", h, size(h + 1), binom_real(static_cast<long double>(root.x) + h, h + 1)));
  }
  {
    BinomRoot root;
    root.h = max_h;
    root.x = invert_binom(static_cast<double>(size(max_h)), max_h);
    root.integral = exact_binom_root(wide(max_h), max_h);
    rep.roots.push_back(root);
  }

  {
    const TriangleStats st = triangle_stats(a);
    BoundCheck c;
    c.name = "kruskal-katona";
    c.h = 2;
    c.measured = st.s_size;
    c.bound = st.eq22_bound;
    c.holds = st.eq22_holds && st.all_hold();
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace sumset
