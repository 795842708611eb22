// One line per acceptance criterion; exit status is the number of failures.
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sumset/arith.hpp"
#include "sumset/bounds.hpp"
#include "sumset/constructions.hpp"
#include "sumset/extractor.hpp"
#include "sumset/harness.hpp"
#include "sumset/multiset.hpp"
#include "sumset/rng.hpp"
#include "sumset/sumset.hpp"

using namespace sumset;

namespace {

// Pinned tolerances and time budgets.
constexpr double kRoundTripRelTol = 1e-9;
constexpr double kStabilityRelTol = 1e-12;
constexpr std::uint64_t kCorpusSeed = 20240601;
constexpr std::size_t kCorpusSize = 500;

struct Outcome {
  bool pass = true;
  std::string detail;
};

PointSet from_mask(std::uint32_t mask, int width) {
  std::vector<Element> pts;
  for (int i = 0; i < width; ++i)
    if (mask >> i & 1u) pts.push_back(Element{i});
  return PointSet(GroupSpec::integers(1), pts);
}

std::uint64_t choose3(std::uint64_t n) { return n * (n + 1) * (n + 2) / 6; }  // C(n+2, 3)

std::vector<PointSet> corpus() {
  const GroupSpec groups[] = {GroupSpec::integers(1), GroupSpec::integers(2), GroupSpec::cyclic(16, 2)};
  SplitMix64 rng(kCorpusSeed);
  std::vector<PointSet> out;
  for (std::size_t i = 0; i < kCorpusSize; ++i) out.push_back(random_point_set(groups[i % 3], 7, 6, rng));
  return out;
}

Outcome dissociated_exactness() {
  auto a = gen_geometric(10).set;
  auto p = profile(a, 3);
  Outcome o;
  o.pass = p.sizes == std::vector<std::uint64_t>{10, 55, 220} && is_dissociated(a, 3);
  o.detail = "sizes " + std::to_string(p.sizes[0]) + "/" + std::to_string(p.sizes[1]) + "/" +
             std::to_string(p.sizes[2]);
  return o;
}

Outcome macaulay_exhaustive() {
  std::size_t sets = 0;
  std::size_t violations = 0;
  std::size_t equalities = 0;
  for (std::uint32_t mask = 1; mask < (1u << 13); ++mask) {
    if (std::popcount(mask) > 4) continue;
    auto a = from_mask(mask, 13);
    ++sets;
    auto rep = bound_suite(a, 3);
    const auto* mac = rep.find("macaulay", 2);
    if (mac == nullptr || !mac->holds) ++violations;
    const bool eq = rep.sizes[2] == choose3(a.size());
    if (eq) ++equalities;
    if (eq != is_dissociated(a, 3)) ++violations;
    const auto* char_check = rep.find("macaulay-equality", 2);
    if (char_check != nullptr && !char_check->holds) ++violations;
  }
  return {violations == 0, std::to_string(sets) + " sets, " + std::to_string(equalities) + " at equality, " +
                               std::to_string(violations) + " violations"};
}

Outcome shadow_identity(const std::vector<PointSet>& sets) {
  std::size_t failures = 0;
  for (const auto& a : sets)
    for (unsigned h = 2; h <= 4; ++h)
      if (!verify_shadow_identity(a, h).passed) ++failures;
  return {failures == 0, std::to_string(sets.size() * 3) + " checks, " + std::to_string(failures) + " failures"};
}

Outcome projections(const std::vector<PointSet>& sets) {
  std::size_t failures = 0;
  for (const auto& a : sets) {
    if (!tuple_embedding_projections(a).all_hold()) ++failures;
    if (!triangle_stats(a).all_hold()) ++failures;
  }
  return {failures == 0, std::to_string(sets.size()) + " sets, " + std::to_string(failures) + " failures"};
}

Outcome constructions() {
  std::vector<std::string> bad;
  auto gap = gen_gap(2, 2, 4);
  const PointSet* part = gap.part("P");
  if (part == nullptr || profile(*part, 3).sizes != std::vector<std::uint64_t>{4, 9, 16}) bad.push_back("gap");

  auto ruzsa = gen_ruzsa(2, 8);
  auto rp = profile(ruzsa.set, 3);
  if (rp.sizes[0] != 26 || rp.sizes[2] < 512) bad.push_back("ruzsa");

  auto random = gen_random(3, 0.5, 9, 7);
  auto n = static_cast<std::uint64_t>(*random.modulus);
  if (profile(random.set, 3).sizes[2] != n * n * n) bad.push_back("random");

  auto higher = gen_higher(3, 2, 4);
  if (profile(higher.set, 4).sizes[3] != 256) bad.push_back("higher");

  std::string detail = "gap 4/9/16, ruzsa |A|=" + std::to_string(rp.sizes[0]) + " |3A|=" + std::to_string(rp.sizes[2]) +
                       ", random |3A|=n^3 (n=" + std::to_string(n) + "), higher |4A|=256";
  for (const auto& b : bad) detail += "; mismatch: " + b;
  return {bad.empty(), detail};
}

Outcome inverse_exhaustive() {
  // M grid: five evenly spaced points of [1, m_max] when that range exists.
  std::size_t sets = 0;
  std::size_t applicable = 0;
  std::size_t failures = 0;
  std::size_t forced = 0;
  std::size_t forced_failures = 0;
  SearchOptions search;
  search.workers = 1;
  for (std::uint32_t mask = 1; mask < (1u << 11); ++mask) {
    if (std::popcount(mask) > 6) continue;
    auto a = from_mask(mask, 11);
    ++sets;
    ExtractOptions opts;
    opts.search = search;
    auto probe = inverse_extract(a, 2, 1.0, Variant::h2, Strategy::exact, opts);
    if (probe.m_max >= 1.0) {
      for (int i = 0; i < 5; ++i) {
        const double M = 1.0 + (probe.m_max - 1.0) * i / 4.0;
        auto r = inverse_extract(a, 2, M, Variant::h2, Strategy::exact, opts);
        if (!r.hypothesis_holds) continue;
        ++applicable;
        if (!r.conclusion1_holds || !r.conclusion2_holds) ++failures;
      }
    }
    // Forced runs exercise the pipeline even where no guarantee applies.
    if (a.size() >= 2) {
      opts.force = true;
      auto r = inverse_extract(a, 2, 1.0, Variant::h2, Strategy::exact, opts);
      ++forced;
      const bool partition = r.x.size() + r.y.size() == a.size() && r.y_size == r.y.size();
      if (!partition || (r.delta < 1.0 && !r.large_subset_bound_holds)) ++forced_failures;
    }
  }
  std::string detail = std::to_string(sets) + " sets, " + std::to_string(applicable) + " applicable (set, M) pairs, " +
                       std::to_string(failures) + " failures; forced runs " + std::to_string(forced) + " with " +
                       std::to_string(forced_failures) + " partition/large-subset failures";
  if (applicable == 0) detail += "; vacuous: no admissible M exists for |A| <= 6";
  return {failures == 0 && forced_failures == 0, detail};
}

Outcome large_subset() {
  SplitMix64 rng(kCorpusSeed + 1);
  std::size_t runs = 0;
  std::size_t failures = 0;
  SearchOptions opts;
  for (int t = 0; t < 200; ++t) {
    auto a = random_point_set(GroupSpec::integers(1), 10, 20, rng);
    for (double delta : {0.3, 0.5, 0.7})
      for (unsigned h : {2u, 3u}) {
        auto r = plunnecke_large_subset(a, h, delta, Strategy::exact, opts);
        ++runs;
        const bool size_ok = static_cast<double>(r.x.size()) >= (1.0 - delta) * static_cast<double>(a.size()) - 1e-9;
        if (!size_ok || !r.bound_K_holds) ++failures;
      }
  }
  return {failures == 0, std::to_string(runs) + " runs, " + std::to_string(failures) + " failures"};
}

Outcome round_trip() {
  constexpr int kPoints = 10000;
  double worst = 0.0;
  for (int i = 0; i < kPoints; ++i) {
    const double x = 1.0 + (1e6 - 1.0) * i / (kPoints - 1);
    const double back = invert_binom(binom_real(x + 1.0, 2), 2);
    worst = std::max(worst, std::abs(back - x) / x);
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "worst relative error %.3g", worst);
  return {worst <= kRoundTripRelTol, buf};
}

bool stability_consistent(const PointSet& a, const StabilityReport& r, std::string& why) {
  auto fail = [&](const std::string& s) {
    why = s;
    return false;
  };
  if (r.size_a != a.size()) return fail("size_a");
  if (!(r.delta > -kStabilityRelTol && r.delta <= 1.0)) return fail("delta range");
  if (!r.found) return r.y.empty() ? true : fail("y without found");
  if (!r.y.is_subset_of(a)) return fail("Y not in A");
  if (r.y_size != r.y.size()) return fail("y_size");
  auto yp = profile(r.y, 3);
  if (yp.sizes[1] != r.y_2sum || yp.sizes[2] != r.y_3sum) return fail("Y sumsets");
  const double c = static_cast<double>(choose3(r.y_size));
  if (std::abs(r.y_ratio - static_cast<double>(r.y_3sum) / c) > kStabilityRelTol) return fail("ratio");
  const double ys = static_cast<double>(r.y_size);
  const bool in_window = ys >= r.window_lo - 1e-9 && ys <= r.window_hi + 1e-9;
  if (in_window != r.size_window_holds) return fail("window flag");
  if (!r.numerator_consistent) return fail("numerator");
  if (r.delta_within_theorem != (r.delta < 1.0 / 1152.0)) return fail("theorem flag");
  return true;
}

Outcome stability() {
  std::vector<std::string> bad;
  auto geo = gen_geometric(10).set;
  auto g = stability_analyze(geo, Strategy::exact);
  const bool exact_case = g.delta == 0.0 && g.y == geo && g.y_3sum == 220 && g.triple_bound == 220.0 &&
                          g.size_window_holds && g.triple_bound_holds;
  if (!exact_case) bad.push_back("geometric exact case");

  std::vector<PointSet> perturbed;
  auto base = gen_geometric(8).set;
  for (std::int64_t extra : {2, 4, 5, 10, 13, 100}) {
    auto pts = base.elements();
    pts.push_back(Element{extra});
    perturbed.emplace_back(base.group(), pts);
  }
  SplitMix64 rng(kCorpusSeed + 2);
  for (int t = 0; t < 40; ++t) perturbed.push_back(random_point_set(GroupSpec::integers(1), 12, 30, rng));
  std::size_t checked = 0;
  for (const auto& a : perturbed)
    for (Strategy s : {Strategy::exact, Strategy::greedy}) {
      std::string why;
      if (!stability_consistent(a, stability_analyze(a, s), why)) bad.push_back(why);
      ++checked;
    }
  std::string detail = "geometric delta=0 Y=A |3Y|=220; " + std::to_string(checked) + " perturbed reports consistent";
  for (const auto& b : bad) detail += "; bad: " + b;
  return {bad.empty(), detail};
}

Outcome sharpness() {
  std::istringstream cfg_text("family = ruzsa\nm = [2, 3, 4, 5, 6]\nKexp = 2\n");
  auto cfg = parse_sweep_config(cfg_text);
  cfg.parallelism = 1;
  auto first = run_sweep(cfg);
  cfg.parallelism = 0;
  auto second = run_sweep(cfg);
  bool ok = first.records.size() == 5 && first.skipped == 0 && first.csv == second.csv && first.jsonl == second.jsonl;
  std::string detail = "rho_2:";
  for (const auto& r : first.records) {
    if (r.rho.size() < 2) {
      ok = false;
      continue;
    }
    const double rho = r.rho[1];
    if (!(rho > 0.0 && rho <= 1.0)) ok = false;
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.4f", rho);
    detail += buf;
  }
  detail += first.csv == second.csv ? "; bytes identical" : "; bytes differ";
  return {ok, detail};
}

}  // namespace

int main() {
  const auto sets = corpus();
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"dissociated exactness", 1, dissociated_exactness},
      {"macaulay bound and equality", 60, macaulay_exhaustive},
      {"shadow identity", 120, [&] { return shadow_identity(sets); }},
      {"projections and triangle counts", 120, [&] { return projections(sets); }},
      {"construction exactness", 60, constructions},
      {"inverse extraction", 600, inverse_exhaustive},
      {"large subset", 600, large_subset},
      {"binomial round trip", 60, round_trip},
      {"stability pipeline", 600, stability},
      {"sharpness ratios", 600, sharpness},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) {
      o.pass = false;
      o.detail += "; over time budget";
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", index, c.name, secs, o.detail.c_str());
  }
  return failures;
}
