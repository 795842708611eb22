#include "sumset/extractor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "internal.hpp"
#include "sumset/arith.hpp"
#include "sumset/bounds.hpp"
#include "sumset/multiset.hpp"
#include "sumset/parallel.hpp"
#include "sumset/sumset.hpp"

namespace sumset {

std::string strategy_name(Strategy s) { return s == Strategy::exact ? "exact" : "greedy"; }

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::h2:
      return "h2";
    case Variant::general_alpha:
      return "general-alpha";
    case Variant::general_K:
      return "general-K";
  }
  return "?";
}

Strategy parse_strategy(const std::string& s) {
  if (s == "exact") return Strategy::exact;
  if (s == "greedy") return Strategy::greedy;
  throw std::invalid_argument("unknown strategy '" + s + "'");
}

Variant parse_variant(const std::string& s) {
  if (s == "h2") return Variant::h2;
  if (s == "alpha" || s == "general-alpha") return Variant::general_alpha;
  if (s == "K" || s == "general-K") return Variant::general_K;
  throw std::invalid_argument("unknown variant '" + s + "'");
}

std::size_t large_subset_floor(double delta, std::size_t n) {
  const long double v = (1.0L - static_cast<long double>(delta)) * static_cast<long double>(n);
  const long double c = std::ceil(v - 1e-9L);
  if (c <= 0) return 0;
  return std::min<std::size_t>(n, static_cast<std::size_t>(c));
}

namespace {

using Bits = std::vector<std::uint64_t>;

/// For every a_i, the indices of a_i + hA inside (h+1)A.
struct Cover {
  std::size_t n = 0;
  std::size_t universe = 0;
  std::uint64_t size_2a = 0;
  std::uint64_t size_ha = 0;
  std::vector<std::vector<std::uint32_t>> rows;
};

Cover build_cover(const PointSet& a, unsigned h) {
  Cover c;
  c.n = a.size();
  const PointSet ha = iterated_sumset(a, h);
  const PointSet next = sumset(ha, a);
  c.size_ha = ha.size();
  c.size_2a = h == 2 ? ha.size() : sumset(a, a).size();
  c.universe = next.size();
  c.rows.resize(c.n);
  std::vector<std::int64_t> buf(a.dim());
  for (std::size_t i = 0; i < c.n; ++i) {
    auto& row = c.rows[i];
    row.reserve(ha.size());
    for (std::size_t j = 0; j < ha.size(); ++j) {
      detail::add_into(a.group(), a.at(i), ha.at(j), buf);
      row.push_back(static_cast<std::uint32_t>(*next.index_of(buf)));
    }
    std::sort(row.begin(), row.end());
  }
  return c;
}

struct Candidate {
  bool found = false;
  std::uint64_t cost = 0;
  std::size_t size = 0;
  std::uint64_t mask = 0;
};

// Equal-size masks: the one owning the lowest differing bit has the smaller
// sorted index list.
bool lex_smaller(std::uint64_t x, std::uint64_t y) {
  if (x == y) return false;
  const std::uint64_t diff = x ^ y;
  return (x & (diff & (~diff + 1))) != 0;
}

bool better(const Candidate& a, const Candidate& b) {
  if (!a.found) return false;
  if (!b.found) return true;
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.size != b.size) return a.size > b.size;
  return lex_smaller(a.mask, b.mask);
}

std::uint64_t popcount(const Bits& b) {
  std::uint64_t c = 0;
  for (auto w : b) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

std::vector<std::size_t> greedy_keep(const Cover& cover, std::size_t min_size, std::uint64_t& cost) {
  std::vector<std::uint32_t> count(cover.universe, 0);
  for (const auto& row : cover.rows) {
    for (auto s : row) ++count[s];
  }
  std::vector<bool> alive(cover.n, true);
  std::size_t size = cover.n;
  while (size > min_size) {
    std::size_t pick = cover.n;
    std::uint64_t pick_gain = 0;
    for (std::size_t i = 0; i < cover.n; ++i) {
      if (!alive[i]) continue;
      std::uint64_t gain = 0;
      for (auto s : cover.rows[i]) gain += count[s] == 1;
      if (pick == cover.n || gain >= pick_gain) {
        pick = i;
        pick_gain = gain;
      }
    }
    alive[pick] = false;
    for (auto s : cover.rows[pick]) --count[s];
    --size;
  }
  cost = static_cast<std::uint64_t>(std::count_if(count.begin(), count.end(), [](auto c) { return c > 0; }));
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < cover.n; ++i) {
    if (alive[i]) keep.push_back(i);
  }
  return keep;
}

Candidate exact_search(const Cover& cover, std::size_t min_size, std::uint64_t ceiling, unsigned workers) {
  const std::size_t n = cover.n;
  const std::size_t words = (cover.universe + 63) / 64;
  std::vector<Bits> rows(n, Bits(words, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto s : cover.rows[i]) rows[i][s / 64] |= std::uint64_t{1} << (s % 64);
  }

  const std::size_t prefix = std::min<std::size_t>(n, 8);
  const std::size_t tasks = std::size_t{1} << prefix;
  std::vector<Candidate> results(tasks);

  parallel_for(tasks, workers, [&](std::size_t t) {
    const auto fixed = static_cast<std::uint64_t>(t);
    const std::size_t fixed_count = static_cast<std::size_t>(std::popcount(fixed));
    if (fixed_count + (n - prefix) < min_size) return;
    std::vector<Bits> stack(n - prefix + 1, Bits(words, 0));
    for (std::size_t i = 0; i < prefix; ++i) {
      if ((fixed >> i) & 1) {
        for (std::size_t w = 0; w < words; ++w) stack[0][w] |= rows[i][w];
      }
    }
    Candidate best;
    std::uint64_t bound = ceiling;
    std::function<void(std::size_t, std::size_t, std::uint64_t)> dfs = [&](std::size_t i, std::size_t count,
                                                                            std::uint64_t mask) {
      const Bits& cur = stack[i - prefix];
      const std::uint64_t cost = popcount(cur);
      if (cost > bound) return;
      if (count + (n - i) < min_size) return;
      if (i == n) {
        Candidate c{true, cost, count, mask};
        if (better(c, best)) {
          best = c;
          bound = std::min(bound, cost);
        }
        return;
      }
      Bits& next = stack[i - prefix + 1];
      for (std::size_t w = 0; w < words; ++w) next[w] = cur[w] | rows[i][w];
      dfs(i + 1, count + 1, mask | (std::uint64_t{1} << i));
      next = cur;
      dfs(i + 1, count, mask);
    };
    dfs(prefix, fixed_count, fixed);
    results[t] = best;
  });

  Candidate best;
  for (const auto& c : results) {
    if (better(c, best)) best = c;
  }
  return best;
}

bool within(long double measured, long double bound) {
  return measured <= bound * (1.0L + static_cast<long double>(kBoundSlack));
}

bool at_least(long double measured, long double bound) {
  return measured >= bound * (1.0L - static_cast<long double>(kBoundSlack));
}

}  // namespace

LargeSubset plunnecke_large_subset(const PointSet& a, unsigned h, double delta, Strategy strategy,
                                   const SearchOptions& options) {
  if (a.empty()) throw std::invalid_argument("large-subset search needs a nonempty set");
  if (h < 2) throw std::invalid_argument("large-subset search needs h >= 2");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  const std::size_t n = a.size();
  if (strategy == Strategy::exact && (n > options.exhaustive_limit || n > 64)) {
    throw std::invalid_argument("exact search limited to " + std::to_string(std::min<std::size_t>(
                                                                 options.exhaustive_limit, 64)) +
                                " elements, set has " + std::to_string(n));
  }

  const Cover cover = build_cover(a, h);
  LargeSubset out;
  out.strategy = strategy;
  out.min_size = large_subset_floor(delta, n);

  std::uint64_t greedy_cost = 0;
  std::vector<std::size_t> keep = greedy_keep(cover, out.min_size, greedy_cost);
  out.cost = greedy_cost;
  if (strategy == Strategy::exact) {
    const Candidate best = exact_search(cover, out.min_size, greedy_cost, options.workers);
    keep.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if ((best.mask >> i) & 1) keep.push_back(i);
    }
    out.cost = best.cost;
  }
  out.x = a.subset(keep);

  const long double size = static_cast<long double>(n);
  const long double K = static_cast<long double>(cover.size_2a) / size;
  const long double alpha = static_cast<long double>(cover.size_ha) / size;
  const long double hd = h;
  const long double d = delta;
  const long double bk = std::pow(K, hd) / std::pow(d, hd - 1.0L) * size;
  const long double ba = hd * std::pow(alpha, hd / (hd - 1.0L)) / std::pow(d, 1.0L / (hd - 1.0L)) * size;
  out.bound_K = static_cast<double>(bk);
  out.bound_alpha = static_cast<double>(ba);
  out.bound_K_holds = within(static_cast<long double>(out.cost), bk);
  out.bound_alpha_holds = within(static_cast<long double>(out.cost), ba);
  return out;
}

double extraction_delta(Variant variant, unsigned h, double M, double K, double alpha, double n) {
  const long double hd = h;
  const long double m2 = 2.0L * static_cast<long double>(M);
  switch (variant) {
    case Variant::h2:
    case Variant::general_K:
      return static_cast<double>(std::pow(m2, 1.0L / (hd - 1.0L)) * std::sqrt(static_cast<long double>(K) / n));
    case Variant::general_alpha:
      return static_cast<double>(std::pow(m2 * hd, hd - 1.0L) * std::pow(static_cast<long double>(alpha), 1.0L / hd) *
                                 std::pow(static_cast<long double>(n), -(hd - 1.0L) / hd));
  }
  return 0.0;
}

ExtractionReport inverse_extract(const PointSet& a, unsigned h, double M, Variant variant, Strategy strategy,
                                 const ExtractOptions& options) {
  if (a.empty()) throw std::invalid_argument("extraction needs a nonempty set");
  if (h < 2) throw std::invalid_argument("extraction needs h >= 2");
  if (variant == Variant::h2 && h != 2) throw std::invalid_argument("variant h2 needs h = 2");
  if (!(M > 0.0) || !std::isfinite(M)) throw std::invalid_argument("M must be positive and finite");

  ExtractionReport r;
  r.variant = variant;
  r.strategy = strategy;
  r.h = h;
  r.M = M;

  const SumsetProfile prof = profile(a, h + 1);
  r.size_a = prof.size(1);
  r.size_2a = prof.size(2);
  r.size_ha = prof.size(h);
  r.size_next = prof.size(h + 1);
  r.K = prof.K;
  r.alpha = prof.alpha[h - 1];

  const long double n = static_cast<long double>(r.size_a);
  const long double K = r.K.to_long_double();
  const long double alpha = r.alpha.to_long_double();
  const long double hd = h;
  const long double m = M;
  const long double m2 = 2.0L * m;

  long double hyp = 0.0L;
  if (variant == Variant::general_alpha) {
    r.m_max = static_cast<double>(std::pow(n / std::pow(alpha, 1.0L / (hd - 1.0L)), 1.0L / hd) / (2.0L * hd));
    hyp = std::pow(alpha * n, (hd + 1.0L) / hd) / m;
  } else {
    r.m_max = static_cast<double>(0.5L * std::pow(n / K, (hd - 1.0L) / 2.0L));
    hyp = std::pow(K * n, (hd + 1.0L) / 2.0L) / m;
  }
  r.hypothesis_bound = static_cast<double>(hyp);

  std::vector<std::string> failed;
  if (M < 1.0) failed.push_back("M < 1");
  if (!within(m, r.m_max)) failed.push_back("M above the admissible maximum");
  if (!at_least(static_cast<long double>(r.size_next), hyp)) failed.push_back("|(h+1)A| below the required lower bound");
  r.hypothesis_holds = failed.empty();
  r.delta = extraction_delta(variant, h, M, static_cast<double>(K), static_cast<double>(alpha), static_cast<double>(n));

  if (!r.hypothesis_holds) {
    for (const auto& f : failed) r.notes.push_back("hypothesis fails: " + f);
    if (!options.force) {
      r.notes.push_back("not applicable; no extraction performed");
      r.x = PointSet(a.group());
      r.y = PointSet(a.group());
      return r;
    }
    r.notes.push_back("forced extraction; conclusions carry no guarantee");
  }

  r.extracted = true;
  if (r.delta >= 1.0 - 1e-12) {
    // Every subset, including the empty one, is admissible.
    r.notes.push_back("delta >= 1: X is empty and Y = A");
    r.x = PointSet(a.group());
    r.x_cost = 0;
    r.large_subset_bound = 0.0;
    r.large_subset_bound_holds = true;
  } else {
    const LargeSubset ls = plunnecke_large_subset(a, h, r.delta, strategy, options.search);
    r.x = ls.x;
    r.x_cost = ls.cost;
    if (variant == Variant::general_alpha) {
      r.large_subset_bound = ls.bound_alpha;
      r.large_subset_bound_holds = ls.bound_alpha_holds;
    } else {
      r.large_subset_bound = ls.bound_K;
      r.large_subset_bound_holds = ls.bound_K_holds;
    }
  }
  r.y = a.difference(r.x);
  r.y_size = r.y.size();
  r.y_next = r.y.empty() ? 0 : iterated_sumset(r.y, h + 1).size();

  const long double y = static_cast<long double>(r.y_size);
  if (variant == Variant::general_alpha) {
    r.y_lower = static_cast<double>(std::pow(alpha * n, 1.0L / hd) / std::pow(m2, 1.0L / hd));
    r.y_upper = static_cast<double>(std::pow(m2 * hd, hd - 1.0L) * std::pow(alpha * n, 1.0L / hd));
    r.y_next_bound = static_cast<double>(std::pow(y, hd + 1.0L) /
                                         (std::pow(m2, hd * hd) * std::pow(hd, hd * hd - 1.0L)));
  } else {
    r.y_lower = static_cast<double>(std::sqrt(K * n) / std::pow(m2, 1.0L / (hd + 1.0L)));
    r.y_upper = static_cast<double>(std::pow(m2, 1.0L / (hd - 1.0L)) * std::sqrt(K * n));
    r.y_next_bound = static_cast<double>(std::pow(y, hd + 1.0L) / std::pow(m2, 4.0L));
  }
  r.conclusion1_holds = r.y_size > 0 && at_least(y, r.y_lower) && within(y, r.y_upper);
  r.conclusion2_holds = r.y_size > 0 && at_least(static_cast<long double>(r.y_next), r.y_next_bound);
  return r;
}

namespace {

struct Pick {
  bool found = false;
  std::uint64_t triples = 0;  // |3Y|
  std::uint64_t binom = 1;    // C(|Y|+2, 3)
  std::size_t size = 0;
  std::uint64_t mask = 0;
};

bool better(const Pick& a, const Pick& b) {
  if (!a.found) return false;
  if (!b.found) return true;
  const Wide lhs = static_cast<Wide>(a.triples) * b.binom;
  const Wide rhs = static_cast<Wide>(b.triples) * a.binom;
  if (lhs != rhs) return lhs > rhs;
  if (a.size != b.size) return a.size > b.size;
  return lex_smaller(a.mask, b.mask);
}

std::uint64_t choose3(std::uint64_t r) { return r * (r + 1) * (r + 2) / 6; }

struct Window {
  std::size_t lo = 1;
  std::size_t hi = 0;
  bool empty() const { return lo > hi; }
};

Window integer_window(double lo, double hi, std::size_t n) {
  Window w;
  const double a = std::ceil(lo - 1e-9);
  const double b = std::floor(hi + 1e-9);
  w.lo = a < 1.0 ? 1 : static_cast<std::size_t>(a);
  w.hi = b < 0.0 ? 0 : std::min<std::size_t>(n, static_cast<std::size_t>(b));
  return w;
}

Pick exact_window(const PointSet& a, Window w, unsigned workers) {
  const std::size_t n = a.size();
  const PointSet a3 = iterated_sumset(a, 3);
  std::vector<std::uint32_t> id(n * n * n);
  std::vector<std::int64_t> buf(a.dim());
  std::vector<std::int64_t> buf2(a.dim());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      detail::add_into(a.group(), a.at(i), a.at(j), buf);
      for (std::size_t k = j; k < n; ++k) {
        detail::add_into(a.group(), buf, a.at(k), buf2);
        id[(i * n + j) * n + k] = static_cast<std::uint32_t>(*a3.index_of(buf2));
      }
    }
  }

  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t chunk = 1 << 12;
  const std::size_t tasks = static_cast<std::size_t>((total + chunk - 1) / chunk);
  std::vector<Pick> results(tasks);
  parallel_for(tasks, workers, [&](std::size_t t) {
    std::vector<std::uint32_t> stamp(a3.size(), 0);
    std::uint32_t epoch = 0;
    std::vector<std::size_t> members;
    Pick best;
    const std::uint64_t begin = std::max<std::uint64_t>(1, t * chunk);
    const std::uint64_t end = std::min<std::uint64_t>(total, (t + 1) * chunk);
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      if (size < w.lo || size > w.hi) continue;
      members.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1) members.push_back(i);
      }
      ++epoch;
      std::uint64_t count = 0;
      for (std::size_t x = 0; x < size; ++x) {
        for (std::size_t y = x; y < size; ++y) {
          const std::size_t base = (members[x] * n + members[y]) * n;
          for (std::size_t z = y; z < size; ++z) {
            auto& s = stamp[id[base + members[z]]];
            if (s != epoch) {
              s = epoch;
              ++count;
            }
          }
        }
      }
      Pick p{true, count, choose3(size), size, mask};
      if (better(p, best)) best = p;
    }
    results[t] = best;
  });
  Pick best;
  for (const auto& p : results) {
    if (better(p, best)) best = p;
  }
  return best;
}

/// Grows Y one vertex at a time, preferring vertices closing the most
/// triangles with Y, then edges into Y, then total triangles, then lowest
/// index; keeps the best in-window prefix.
std::vector<std::size_t> greedy_window(const PointSet& a, Window w) {
  const std::size_t n = a.size();
  const TriangleGraph g = triangle_graph(a);
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> tri(n);
  for (const auto& t : g.triangles) {
    tri[t[0]].push_back({t[1], t[2]});
    tri[t[1]].push_back({t[0], t[2]});
    tri[t[2]].push_back({t[0], t[1]});
  }
  std::vector<bool> in(n, false);
  std::vector<std::size_t> order;
  Pick best;
  std::vector<std::size_t> best_members;
  while (order.size() < w.hi) {
    std::size_t pick = n;
    std::tuple<std::size_t, std::size_t, std::size_t> pick_score{};
    for (std::size_t v = 0; v < n; ++v) {
      if (in[v]) continue;
      std::size_t closed = 0;
      for (auto [p, q] : tri[v]) closed += in[p] && in[q];
      std::size_t edges = 0;
      for (auto u : g.adjacency[v]) edges += in[u];
      std::tuple<std::size_t, std::size_t, std::size_t> score{closed, edges, tri[v].size()};
      if (pick == n || score > pick_score) {
        pick = v;
        pick_score = score;
      }
    }
    in[pick] = true;
    order.push_back(pick);
    if (order.size() < w.lo) continue;
    const PointSet y = a.subset(order);
    const std::size_t size = order.size();
    // Sizes along one growth path are distinct, so the mask is never consulted.
    Pick p{true, iterated_sumset(y, 3).size(), choose3(size), size, 0};
    if (better(p, best)) {
      best = p;
      best_members = order;
    }
  }
  std::sort(best_members.begin(), best_members.end());
  return best_members;
}

}  // namespace

StabilityReport stability_analyze(const PointSet& a, Strategy strategy, const StabilityOptions& options) {
  if (a.empty()) throw std::invalid_argument("stability analysis needs a nonempty set");
  StabilityReport r;
  r.strategy = strategy;
  const SumsetProfile prof = profile(a, 3);
  r.size_a = prof.size(1);
  r.size_2a = prof.size(2);
  r.size_3a = prof.size(3);
  r.x = invert_binom(static_cast<double>(r.size_2a), 2);
  r.x_integral = exact_binom_root(static_cast<Wide>(r.size_2a), 2);
  if (r.x_integral) {
    const Wide b = *binomial(*r.x_integral + 2, 3);
    r.macaulay_bound = static_cast<double>(b);
    r.delta = (Rational(1) - Rational(static_cast<Wide>(r.size_3a), b)).to_double();
  } else {
    const long double b = binom_real(static_cast<long double>(r.x) + 2.0L, 3);
    r.macaulay_bound = static_cast<double>(b);
    r.delta = static_cast<double>(1.0L - static_cast<long double>(r.size_3a) / b);
  }
  if (r.delta < 0.0) {
    if (r.delta < -1e-9) r.notes.push_back("|3A| exceeds binom_real(x+2,3) beyond rounding");
    r.notes.push_back("negative delta from rounding clamped to 0");
    r.delta = 0.0;
    r.delta_clamped = true;
  }
  const double root = std::sqrt(r.delta);
  r.window_lo = (1.0 - 6.0 * root) * r.x;
  r.window_hi = (1.0 + 9.0 * root) * (r.x + 1.0);
  r.delta_within_theorem = r.delta < 1.0 / 1152.0;
  if (!r.delta_within_theorem) r.notes.push_back("delta >= 1/1152: outside the theorem's range");
  r.notes.push_back("the guarantee needs A large enough; small sets give non-binding verdicts");

  const std::size_t n = a.size();
  const Window w = integer_window(r.window_lo, r.window_hi, n);
  r.y = PointSet(a.group());
  if (w.empty()) {
    r.notes.push_back("size window contains no admissible subset size");
    return r;
  }

  Strategy used = strategy;
  if (strategy == Strategy::exact && (n > options.exhaustive_limit || n > 30)) {
    r.notes.push_back("set exceeds the exhaustive limit; greedy search used");
    used = Strategy::greedy;
  }
  r.strategy = used;
  if (used == Strategy::exact) {
    const Pick best = exact_window(a, w, options.workers);
    r.y = a.subset_mask(best.mask);
  } else {
    const auto members = greedy_window(a, w);
    r.y = a.subset(members);
  }
  if (r.y.empty()) return r;

  r.found = true;
  r.y_size = r.y.size();
  const SumsetProfile yp = profile(r.y, 3);
  r.y_2sum = yp.size(2);
  r.y_3sum = yp.size(3);
  const double c = static_cast<double>(choose3(r.y_size));
  r.y_ratio = static_cast<double>(r.y_3sum) / c;
  r.triple_bound = (1.0 - 50.0 * root) * c;
  r.size_window_holds = static_cast<double>(r.y_size) >= r.window_lo - 1e-9 &&
                        static_cast<double>(r.y_size) <= r.window_hi + 1e-9;
  r.triple_bound_holds = static_cast<double>(r.y_3sum) >= r.triple_bound * (1.0 - kBoundSlack);
  r.x_y = invert_binom(static_cast<double>(r.y_2sum), 2);
  if (auto j = exact_binom_root(static_cast<Wide>(r.y_2sum), 2)) {
    r.numerator_consistent = static_cast<Wide>(r.y_3sum) <= *binomial(*j + 2, 3);
  } else {
    r.numerator_consistent =
        within(static_cast<long double>(r.y_3sum), binom_real(static_cast<long double>(r.x_y) + 2.0L, 3));
  }
  return r;
}

}  // namespace sumset
