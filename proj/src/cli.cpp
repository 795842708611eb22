#include "sumset/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>

#include "sumset/bounds.hpp"
#include "sumset/constructions.hpp"
#include "sumset/extractor.hpp"
#include "sumset/harness.hpp"
#include "sumset/multiset.hpp"
#include "sumset/pts_io.hpp"
#include "sumset/report_json.hpp"
#include "sumset/sumset.hpp"

namespace sumset {
namespace {

std::string element_text(const PointSet& ground, std::uint32_t i) {
  auto c = ground.at(i);
  if (c.size() == 1) return std::to_string(c[0]);
  std::string s = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(c[k]);
  }
  return s + ")";
}

void print_family(std::ostream& out, const std::string& title, const MultisetFamily& f) {
  out << "# " << title << " (" << f.size() << ")\n";
  for (const auto& m : f.members()) {
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
      if (i) out << ' ';
      out << element_text(f.ground(), m.entries[i]);
    }
    out << '\n';
  }
}

std::string sidecar_path(const std::string& pts) {
  const std::string ext = ".pts";
  if (pts.size() > ext.size() && pts.compare(pts.size() - ext.size(), ext.size(), ext) == 0) {
    return pts.substr(0, pts.size() - ext.size()) + ".json";
  }
  return pts + ".json";
}

struct Options {
  // shared
  std::string input;
  bool json = false;
  unsigned max_h = 0;
  unsigned h = 0;
  // gen
  std::string family;
  std::string output;
  ConstructionParams gen;
  // extract / stability
  double M = 1.0;
  std::string variant = "h2";
  std::string strategy = "exact";
  bool force = false;
  std::size_t limit = 0;
  // sweep
  std::string config;
  std::optional<unsigned> parallelism;
  // fuzz
  std::string group = "0";
  std::uint64_t trials = 500;
  std::size_t size_max = 8;
  std::uint64_t seed = 1;
  std::int64_t span = 16;
};

LoadedSet load_input(const Options& o, std::ostream& err) {
  LoadedSet loaded = load_pts(o.input);
  if (loaded.reduced || loaded.duplicates) {
    err << "note: " << loaded.reduced << " coordinates reduced, " << loaded.duplicates << " duplicates merged\n";
  }
  if (loaded.set.empty()) throw std::invalid_argument(o.input + " contains no elements");
  return loaded;
}

int cmd_gen(const Options& o, std::ostream& out) {
  ConstructionParams p = o.gen;
  p.family = parse_family(o.family);
  const Construction c = generate(p);
  save_pts(o.output, c.set);
  const std::string side = sidecar_path(o.output);
  std::ofstream js(side);
  if (!js) throw std::runtime_error("cannot write " + side);
  Json j = construction_json(c);
  j["file"] = o.output;
  js << j.dump(2) << '\n';
  out << "wrote " << o.output << " (" << c.set.size() << " elements) and " << side << '\n';
  return kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out, std::ostream& err) {
  const LoadedSet loaded = load_input(o, err);
  const SumsetProfile p = profile(loaded.set, o.max_h);
  if (o.json) {
    Json j = profile_json(p);
    j["group"] = loaded.set.group().moduli();
    j["reduced"] = loaded.reduced;
    j["duplicates"] = loaded.duplicates;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  for (unsigned h = 1; h <= p.max_h(); ++h) out << "|" << (h == 1 ? "" : std::to_string(h)) << "A| = " << p.size(h) << '\n';
  out << "K = " << p.K.str() << " (" << p.K.to_double() << ")\n";
  for (unsigned h = 2; h <= p.max_h(); ++h) {
    out << "alpha_" << h << " = " << p.alpha[h - 1].str() << " (" << p.alpha[h - 1].to_double() << ")\n";
  }
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const LoadedSet loaded = load_input(o, err);
  const PointSet& a = loaded.set;
  const BoundReport rep = bound_suite(a, o.max_h);
  const std::vector<std::string> failed = failing_checks(a, o.max_h);
  if (o.json) {
    Json j = bound_report_json(rep);
    j["failed"] = failed;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& c : rep.checks) {
      out << c.name << " h=" << c.h << ": " << c.measured << " vs ";
      if (c.exact_bound) {
        out << to_string(*c.exact_bound);
      } else {
        out << c.bound;
      }
      out << (c.holds ? "  ok" : "  VIOLATED") << (c.equality ? " (equality)" : "") << '\n';
    }
    out << (failed.empty() ? "all checks hold\n" : "violations found\n");
  }
  if (!failed.empty()) {
    for (const auto& f : failed) err << "violated: " << f << '\n';
    err << "witness:\n";
    write_pts(err, a);
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_embed(const Options& o, std::ostream& out, std::ostream& err) {
  const LoadedSet loaded = load_input(o, err);
  auto ground = std::make_shared<const PointSet>(loaded.set);
  const MultisetFamily s = lexmin_embedding(ground, o.h);
  const MultisetFamily c = lexmin_embedding(ground, o.h - 1);
  const MultisetFamily ds = shadow(s);
  const bool identity = ds.same_as(c);
  if (!o.json) {
    print_family(out, "S: lex-minimal " + std::to_string(o.h) + "-multisets", s);
    print_family(out, "C: lex-minimal " + std::to_string(o.h - 1) + "-multisets", c);
    print_family(out, "dS: lower shadow of S", ds);
  }
  Json j{{"h", o.h}, {"sizes", {{"S", s.size()}, {"C", c.size()}, {"shadow", ds.size()}}}, {"shadowIdentity", identity}};
  out << j.dump() << '\n';
  return identity ? kExitOk : kExitViolation;
}

int cmd_dissoc(const Options& o, std::ostream& out, std::ostream& err) {
  const LoadedSet loaded = load_input(o, err);
  const auto n = static_cast<std::int64_t>(loaded.set.size());
  const std::size_t sums = iterated_sumset(loaded.set, o.h).size();
  const auto count = binomial(n + o.h - 1, o.h);
  const bool dissociated = count && static_cast<Wide>(sums) == *count;
  if (o.json) {
    Json j{{"h", o.h}, {"sumCount", sums}, {"multisetCount", count ? wide_json(*count) : Json(nullptr)},
           {"dissociated", dissociated}};
    out << j.dump(2) << '\n';
  } else {
    out << o.h << "-dissociated: " << (dissociated ? "yes" : "no") << " (|" << o.h << "A| = " << sums;
    if (count) out << ", C(" << n + o.h - 1 << "," << o.h << ") = " << to_string(*count);
    out << ")\n";
  }
  return kExitOk;
}

int cmd_extract(const Options& o, std::ostream& out, std::ostream& err) {
  const LoadedSet loaded = load_input(o, err);
  ExtractOptions opts;
  opts.force = o.force;
  if (o.limit) opts.search.exhaustive_limit = o.limit;
  const Strategy strategy = parse_strategy(o.strategy);
  const ExtractionReport r = inverse_extract(loaded.set, o.h, o.M, parse_variant(o.variant), strategy, opts);
  if (o.json) {
    out << extraction_json(r).dump(2) << '\n';
  } else {
    out << "variant " << variant_name(r.variant) << ", h = " << r.h << ", M = " << r.M << ", delta = " << r.delta
        << '\n';
    out << "hypotheses " << (r.hypothesis_holds ? "hold" : "fail") << " (M <= " << r.m_max << ", |(h+1)A| = "
        << r.size_next << " vs " << r.hypothesis_bound << ")\n";
    if (r.extracted) {
      out << "|X| = " << r.x.size() << ", |X + hA| = " << r.x_cost << " <= " << r.large_subset_bound << '\n';
      out << "|Y| = " << r.y_size << " in [" << r.y_lower << ", " << r.y_upper << "]: "
          << (r.conclusion1_holds ? "yes" : "no") << '\n';
      out << "|(h+1)Y| = " << r.y_next << " >= " << r.y_next_bound << ": " << (r.conclusion2_holds ? "yes" : "no")
          << '\n';
    }
    for (const auto& n : r.notes) out << "note: " << n << '\n';
  }
  const bool guaranteed = r.extracted && r.hypothesis_holds && strategy == Strategy::exact;
  if (guaranteed && !(r.conclusion1_holds && r.conclusion2_holds && r.large_subset_bound_holds)) {
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_stability(const Options& o, std::ostream& out, std::ostream& err) {
  const LoadedSet loaded = load_input(o, err);
  StabilityOptions opts;
  if (o.limit) opts.exhaustive_limit = o.limit;
  const StabilityReport r = stability_analyze(loaded.set, parse_strategy(o.strategy), opts);
  if (o.json) {
    out << stability_json(r).dump(2) << '\n';
  } else {
    out << "x = " << r.x << ", delta = " << r.delta << ", window [" << r.window_lo << ", " << r.window_hi << "]\n";
    if (r.found) {
      out << "|Y| = " << r.y_size << ", |3Y| = " << r.y_3sum << ", ratio " << r.y_ratio << '\n';
      out << "size window: " << (r.size_window_holds ? "yes" : "no")
          << ", triple bound: " << (r.triple_bound_holds ? "yes" : "no") << '\n';
    }
    for (const auto& n : r.notes) out << "note: " << n << '\n';
  }
  return r.found && !r.numerator_consistent ? kExitViolation : kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  SweepConfig cfg = load_sweep_config(o.config);
  if (!o.output.empty()) cfg.output = o.output;
  if (o.parallelism) cfg.parallelism = *o.parallelism;
  const SweepResult res = run_sweep(cfg);
  bool rho_ok = true;
  for (const auto& r : res.records) {
    for (double rho : r.rho) rho_ok = rho_ok && rho <= 1.0 + kBoundSlack;
  }
  if (cfg.output.empty()) {
    out << res.csv;
  } else {
    write_sweep(res, cfg.output);
    out << res.records.size() << " grid points, " << res.skipped << " skipped; wrote " << cfg.output << ".csv and "
        << cfg.output << ".jsonl\n";
  }
  for (const auto& r : res.records) {
    if (r.skipped) err << "skipped point " << r.index << ": " << *r.skipped << '\n';
  }
  return res.all_bounds_hold() && rho_ok ? kExitOk : kExitViolation;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
  const GroupSpec g = parse_group(o.group);
  FuzzOptions opts;
  opts.span = o.span;
  opts.max_h = o.max_h;
  const FuzzSummary s = fuzz_check(g, o.trials, o.size_max, o.seed, opts);
  if (o.json) {
    out << fuzz_summary_json(s).dump(2) << '\n';
  } else {
    out << s.trials << " trials in " << g.directive().substr(1) << ", " << s.violations << " violations\n";
    for (const auto& f : s.failures) {
      out << "trial " << f.trial << ":";
      for (const auto& c : f.checks) out << ' ' << c;
      out << "\nminimized witness (" << f.witness.size() << " of " << f.original_size << " elements):\n";
      write_pts(out, f.witness);
    }
  }
  return s.ok() ? kExitOk : kExitViolation;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Iterated sumsets: sizes, bounds, constructions and extraction", "sumset"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "generate a construction");
  gen->add_option("family", o.family, "geometric | ruzsa | random | gap | higher")->required();
  gen->add_option("--n", o.gen.size, "geometric: number of terms");
  gen->add_option("--base", o.gen.base, "geometric: ratio");
  gen->add_option("--m", o.gen.m, "cube side");
  gen->add_option("--K", o.gen.K, "target doubling");
  gen->add_option("--p", o.gen.p, "inclusion probability");
  gen->add_option("--seed", o.gen.seed, "random seed");
  gen->add_option("--k", o.gen.k, "GAP digit bound");
  gen->add_option("--d", o.gen.d, "GAP dimension");
  gen->add_option("--h", o.gen.h, "sum order");
  gen->add_option("--alpha", o.gen.alpha, "target ratio");
  gen->add_option("-o,--output", o.output, "output .pts path")->required();

  auto* stats = app.add_subcommand("stats", "sumset size profile");
  stats->add_option("-i,--input", o.input)->required();
  stats->add_option("--max-h", o.max_h)->default_val(3)->check(CLI::Range(2, 64));
  stats->add_flag("--json", o.json);

  auto* check = app.add_subcommand("check", "evaluate every inequality");
  check->add_option("-i,--input", o.input)->required();
  check->add_option("--max-h", o.max_h)->default_val(4)->check(CLI::Range(3, 16));
  check->add_flag("--json", o.json);

  auto* embed = app.add_subcommand("embed", "lex-minimal embeddings and shadow");
  embed->add_option("-i,--input", o.input)->required();
  embed->add_option("--h", o.h)->default_val(3)->check(CLI::Range(2, 16));
  embed->add_flag("--json", o.json, "print only the summary");

  auto* dissoc = app.add_subcommand("dissoc", "test h-dissociation");
  dissoc->add_option("-i,--input", o.input)->required();
  dissoc->add_option("--h", o.h)->default_val(3)->check(CLI::Range(2, 64));
  dissoc->add_flag("--json", o.json);

  auto* extract = app.add_subcommand("extract", "inverse-theorem extraction");
  extract->add_option("-i,--input", o.input)->required();
  extract->add_option("--h", o.h)->default_val(2)->check(CLI::Range(2, 16));
  extract->add_option("--M", o.M)->default_val(1.0);
  extract->add_option("--variant", o.variant)->default_val("h2")->check(CLI::IsMember({"h2", "alpha", "K"}));
  extract->add_option("--strategy", o.strategy)->default_val("exact")->check(CLI::IsMember({"exact", "greedy"}));
  extract->add_option("--limit", o.limit, "exhaustive search limit");
  extract->add_flag("--force", o.force, "extract even when the hypotheses fail");
  extract->add_flag("--json", o.json);

  auto* stability = app.add_subcommand("stability", "near-dissociated subset search");
  stability->add_option("-i,--input", o.input)->required();
  stability->add_option("--strategy", o.strategy)->default_val("exact")->check(CLI::IsMember({"exact", "greedy"}));
  stability->add_option("--limit", o.limit, "exhaustive search limit");
  stability->add_flag("--json", o.json);

  auto* sweep = app.add_subcommand("sweep", "parameter sweep");
  sweep->add_option("-c,--config", o.config, "sweep config file")->required();
  sweep->add_option("-o,--output", o.output, "output prefix (overrides the config)");
  sweep->add_option("--parallelism", o.parallelism, "worker threads, 0 for all cores");

  auto* fuzz = app.add_subcommand("fuzz", "randomized property check");
  fuzz->add_option("--group", o.group, "moduli, e.g. \"0\" or \"16 16\"")->default_val("0");
  fuzz->add_option("--trials", o.trials)->default_val(500);
  fuzz->add_option("--size-max", o.size_max)->default_val(8);
  fuzz->add_option("--seed", o.seed)->default_val(1);
  fuzz->add_option("--span", o.span)->default_val(16);
  fuzz->add_option("--max-h", o.max_h)->default_val(4)->check(CLI::Range(3, 8));
  fuzz->add_flag("--json", o.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*stats) return cmd_stats(o, out, err);
    if (*check) return cmd_check(o, out, err);
    if (*embed) return cmd_embed(o, out, err);
    if (*dissoc) return cmd_dissoc(o, out, err);
    if (*extract) return cmd_extract(o, out, err);
    if (*stability) return cmd_stability(o, out, err);
    if (*sweep) return cmd_sweep(o, out, err);
    if (*fuzz) return cmd_fuzz(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sumset
