#include "sumset/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sumset/bounds.hpp"
#include "sumset/multiset.hpp"
#include "sumset/parallel.hpp"
#include "sumset/pts_io.hpp"

namespace sumset {
namespace {

const std::vector<std::string> kGridKeys = {"n", "base", "m", "K", "Kexp", "p", "seed", "k", "d", "h", "alpha"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

std::int64_t parse_int(const std::string& s, const std::string& key) {
  std::size_t pos = 0;
  try {
    const long long v = std::stoll(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("key '" + key + "': expected an integer, got '" + s + "'");
}

std::uint64_t parse_uint(const std::string& s, const std::string& key) {
  std::size_t pos = 0;
  try {
    if (!s.empty() && s[0] != '-') {
      const unsigned long long v = std::stoull(s, &pos);
      if (pos == s.size()) return v;
    }
  } catch (const std::exception&) {
  }
  throw ParseError("key '" + key + "': expected a nonnegative integer, got '" + s + "'");
}

double parse_real(const std::string& s, const std::string& key) {
  std::size_t pos = 0;
  try {
    const double v = std::stod(s, &pos);
    if (pos == s.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("key '" + key + "': expected a number, got '" + s + "'");
}

bool is_real_key(const std::string& key) { return key == "K" || key == "Kexp" || key == "p" || key == "alpha"; }

void validate_value(const std::string& key, const std::string& v) {
  if (key == "seed") {
    parse_uint(v, key);
  } else if (is_real_key(key)) {
    parse_real(v, key);
  } else {
    parse_int(v, key);
  }
}

std::vector<std::string> parse_values(const std::string& raw, const std::string& key) {
  std::string v = trim(raw);
  if (v.empty()) throw ParseError("key '" + key + "': missing value");
  if (v.front() != '[') return {v};
  if (v.back() != ']') throw ParseError("key '" + key + "': unterminated list");
  v = trim(v.substr(1, v.size() - 2));
  std::vector<std::string> out;
  if (v.empty()) return out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ParseError("key '" + key + "': empty list entry");
    out.push_back(item);
  }
  return out;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ',';
    s += cells[i];
  }
  return s;
}

std::vector<std::string> extra_names(Family f) {
  if (f == Family::gap) return {"P_size", "P2_size", "P3_size"};
  if (f == Family::random) return {"X_size"};
  return {};
}

ConstructionParams apply_point(Family family, const std::map<std::string, std::string>& point) {
  ConstructionParams p;
  p.family = family;
  std::optional<double> kexp;
  for (const auto& [key, v] : point) {
    if (key == "n") p.size = parse_int(v, key);
    else if (key == "base") p.base = parse_int(v, key);
    else if (key == "m") p.m = parse_int(v, key);
    else if (key == "K") p.K = parse_real(v, key);
    else if (key == "Kexp") kexp = parse_real(v, key);
    else if (key == "p") p.p = parse_real(v, key);
    else if (key == "seed") p.seed = parse_uint(v, key);
    else if (key == "k") p.k = parse_int(v, key);
    else if (key == "d") p.d = parse_int(v, key);
    else if (key == "h") {
      const auto h = parse_int(v, key);
      if (h < 0) throw std::invalid_argument("h must be nonnegative");
      p.h = static_cast<unsigned>(h);
    } else if (key == "alpha") p.alpha = parse_real(v, key);
  }
  if (kexp) {
    if (family == Family::ruzsa || family == Family::random) {
      p.K = std::pow(static_cast<double>(p.m), *kexp);
    } else if (family == Family::gap) {
      p.K = std::pow(std::pow(static_cast<double>(p.k), static_cast<double>(p.d)), *kexp);
    }
  }
  return p;
}

RunRecord run_point(const SweepConfig& config, std::size_t index, const std::map<std::string, std::string>& point) {
  RunRecord r;
  r.index = index;
  r.point = point;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.params = apply_point(config.family, point);
    const Construction c = generate(r.params);
    r.params = c.params;
    r.spline_length = c.spline_length;
    r.modulus = c.modulus;
    const PointSet& a = c.set;
    const BoundReport rep = bound_suite(a, config.max_h);
    r.profile.sizes = rep.sizes;
    const auto n = static_cast<Wide>(rep.sizes[0]);
    r.profile.K = Rational(static_cast<Wide>(rep.sizes[1]), n);
    for (std::uint64_t s : rep.sizes) r.profile.alpha.push_back(Rational(static_cast<Wide>(s), n));
    for (unsigned h = 1; h < config.max_h; ++h) {
      const long double top = static_cast<long double>(rep.sizes[h]);
      const long double base = static_cast<long double>(rep.sizes[h - 1]);
      r.rho.push_back(static_cast<double>(top / std::pow(base, (h + 1.0L) / h)));
    }
    r.bounds_ok = rep.all_hold();
    for (const auto& chk : rep.checks) {
      if (!chk.holds) r.failed_bounds.push_back(chk.name + " h=" + std::to_string(chk.h));
    }
    if (config.family == Family::gap) {
      const PointSet& p = *c.part("P");
      r.extras = {{"P_size", p.size()},
                  {"P2_size", sumset(p, p).size()},
                  {"P3_size", iterated_sumset(p, 3).size()}};
    } else if (config.family == Family::random) {
      r.extras = {{"X_size", c.part("X")->size()}};
    }
  } catch (const std::invalid_argument& e) {
    r.skipped = e.what();
  } catch (const std::overflow_error& e) {
    r.skipped = e.what();
  } catch (const ParseError& e) {
    r.skipped = e.what();
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string param_cell(const RunRecord& r, const std::string& name) {
  const auto& p = r.params;
  const Family f = p.family;
  const bool ruzsa_like = f == Family::ruzsa || f == Family::random;
  if (name == "n") return f == Family::geometric ? std::to_string(p.size) : "";
  if (name == "base") return f == Family::geometric ? std::to_string(p.base) : "";
  if (name == "m") return ruzsa_like || f == Family::higher ? std::to_string(p.m) : "";
  if (name == "K_param") return ruzsa_like || f == Family::gap ? fmt(p.K) : "";
  if (name == "p") return f == Family::random ? fmt(p.p) : "";
  if (name == "seed") return f == Family::random ? std::to_string(p.seed) : "";
  if (name == "k") return f == Family::gap ? std::to_string(p.k) : "";
  if (name == "d") return f == Family::gap ? std::to_string(p.d) : "";
  if (name == "h") return f == Family::higher ? std::to_string(p.h) : "";
  if (name == "alpha_param") return f == Family::higher ? fmt(p.alpha) : "";
  return "";
}

const std::vector<std::string> kParamColumns = {"n", "base", "m", "K_param", "p", "seed", "k", "d", "h", "alpha_param"};

}  // namespace

SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig cfg;
  bool have_family = false;
  std::map<std::string, std::vector<std::string>> grid;
  std::vector<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    seen.push_back(key);
    try {
      if (key == "family") {
        cfg.family = parse_family(unquote(value));
        have_family = true;
      } else if (key == "maxH" || key == "max_h") {
        const auto h = parse_uint(value, key);
        if (h < 3 || h > 16) throw ParseError("maxH must lie in [3, 16]");
        cfg.max_h = static_cast<unsigned>(h);
      } else if (key == "output") {
        cfg.output = unquote(value);
      } else if (key == "parallelism") {
        cfg.parallelism = static_cast<unsigned>(parse_uint(value, key));
      } else if (key == "timing") {
        if (value != "true" && value != "false") throw ParseError("timing must be true or false");
        cfg.timing = value == "true";
      } else if (std::find(kGridKeys.begin(), kGridKeys.end(), key) != kGridKeys.end()) {
        auto values = parse_values(value, key);
        for (const auto& v : values) validate_value(key, v);
        grid[key] = std::move(values);
      } else {
        throw ParseError("unknown key '" + key + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_family) throw ParseError("config needs a family");
  for (const auto& key : kGridKeys) {
    auto it = grid.find(key);
    if (it != grid.end()) cfg.grid.emplace_back(key, it->second);
  }
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_sweep_config(in);
}

std::vector<std::string> sweep_csv_header(const SweepConfig& config) {
  std::vector<std::string> h{"index", "family"};
  h.insert(h.end(), kParamColumns.begin(), kParamColumns.end());
  h.push_back("L");
  h.push_back("modulus");
  for (unsigned k = 1; k <= config.max_h; ++k) h.push_back("size_" + std::to_string(k));
  h.push_back("K");
  for (unsigned k = 2; k <= config.max_h; ++k) h.push_back("alpha_" + std::to_string(k));
  for (unsigned k = 1; k < config.max_h; ++k) h.push_back("rho_" + std::to_string(k));
  h.push_back("bounds_ok");
  for (const auto& e : extra_names(config.family)) h.push_back(e);
  if (config.timing) h.push_back("wall_ms");
  return h;
}

bool SweepResult::all_bounds_hold() const {
  for (const auto& r : records) {
    if (!r.skipped && !r.bounds_ok) return false;
  }
  return true;
}

SweepResult run_sweep(const SweepConfig& config) {
  // Expand the grid; any empty list leaves no points.
  std::vector<std::map<std::string, std::string>> points(1);
  for (const auto& [key, values] : config.grid) {
    std::vector<std::map<std::string, std::string>> next;
    for (const auto& p : points) {
      for (const auto& v : values) {
        auto q = p;
        q[key] = v;
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  if (config.grid.empty()) points.assign(1, {});

  SweepResult out;
  out.records.resize(points.size());
  parallel_for(points.size(), config.parallelism,
               [&](std::size_t i) { out.records[i] = run_point(config, i, points[i]); });

  std::ostringstream csv;
  std::ostringstream jsonl;
  csv << csv_row(sweep_csv_header(config)) << '\n';
  for (const auto& r : out.records) {
    jsonl << run_record_json(r, config.timing).dump() << '\n';
    if (r.skipped) {
      ++out.skipped;
      continue;
    }
    std::vector<std::string> cells{std::to_string(r.index), family_name(config.family)};
    for (const auto& name : kParamColumns) cells.push_back(param_cell(r, name));
    cells.push_back(r.spline_length ? std::to_string(*r.spline_length) : "");
    cells.push_back(r.modulus ? std::to_string(*r.modulus) : "");
    for (auto s : r.profile.sizes) cells.push_back(std::to_string(s));
    cells.push_back(fmt(r.profile.K.to_double()));
    for (std::size_t h = 1; h < r.profile.alpha.size(); ++h) cells.push_back(fmt(r.profile.alpha[h].to_double()));
    for (double rho : r.rho) cells.push_back(fmt(rho));
    cells.push_back(r.bounds_ok ? "true" : "false");
    for (const auto& e : r.extras) cells.push_back(std::to_string(e.second));
    if (config.timing) cells.push_back(fmt(r.wall_ms));
    csv << csv_row(cells) << '\n';
  }
  out.csv = csv.str();
  out.jsonl = jsonl.str();
  return out;
}

void write_sweep(const SweepResult& result, const std::string& prefix) {
  auto write = [](const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
    if (!f) throw std::runtime_error("write failed for " + path);
  };
  write(prefix + ".csv", result.csv);
  write(prefix + ".jsonl", result.jsonl);
}

PointSet random_point_set(const GroupSpec& g, std::size_t size_max, std::int64_t span, SplitMix64& rng) {
  const std::size_t size = 1 + static_cast<std::size_t>(rng.below(size_max));
  std::vector<std::int64_t> flat;
  flat.reserve(size * g.dim());
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t k = 0; k < g.dim(); ++k) {
      flat.push_back(g.is_finite(k) ? rng.between(0, g.modulus(k) - 1) : rng.between(-span, span));
    }
  }
  return PointSet::from_flat(g, std::move(flat));
}

std::vector<std::string> failing_checks(const PointSet& a, unsigned max_h) {
  std::vector<std::string> failed;
  const BoundReport rep = bound_suite(a, max_h);
  for (const auto& c : rep.checks) {
    if (!c.holds) failed.push_back(c.name + " h=" + std::to_string(c.h));
  }
  for (unsigned h = 2; h <= max_h; ++h) {
    if (!verify_shadow_identity(a, h).passed) failed.push_back("shadow-identity h=" + std::to_string(h));
  }
  if (!tuple_embedding_projections(a).all_hold()) failed.push_back("projections");
  if (!triangle_stats(a).all_hold()) failed.push_back("triangle-stats");
  return failed;
}

PointSet minimize_witness(const PointSet& a, const std::function<bool(const PointSet&)>& still_fails) {
  PointSet cur = a;
  bool shrunk = true;
  while (shrunk && cur.size() > 1) {
    shrunk = false;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      std::vector<std::size_t> keep;
      for (std::size_t j = 0; j < cur.size(); ++j) {
        if (j != i) keep.push_back(j);
      }
      PointSet candidate = cur.subset(keep);
      if (still_fails(candidate)) {
        cur = std::move(candidate);
        shrunk = true;
        break;
      }
    }
  }
  return cur;
}

FuzzSummary fuzz_check(const GroupSpec& group, std::uint64_t trials, std::size_t size_max, std::uint64_t seed,
                       const FuzzOptions& options) {
  if (trials == 0) throw std::invalid_argument("fuzz needs at least one trial");
  if (size_max == 0) throw std::invalid_argument("fuzz needs size_max >= 1");
  if (options.max_h < 3) throw std::invalid_argument("fuzz needs max_h >= 3");
  auto check = options.checker ? options.checker
                               : std::function<std::vector<std::string>(const PointSet&)>(
                                     [&](const PointSet& s) { return failing_checks(s, options.max_h); });

  std::vector<std::vector<std::string>> failed(trials);
  std::vector<PointSet> sets(trials, PointSet(group));
  parallel_for(static_cast<std::size_t>(trials), options.workers, [&](std::size_t t) {
    SplitMix64 rng = SplitMix64::derive(seed, t);
    sets[t] = random_point_set(group, size_max, options.span, rng);
    failed[t] = check(sets[t]);
  });

  FuzzSummary s;
  s.trials = trials;
  s.seed = seed;
  for (std::size_t t = 0; t < trials; ++t) {
    if (failed[t].empty()) continue;
    ++s.violations;
    if (s.failures.size() >= options.minimize_limit) continue;
    FuzzFailure f;
    f.trial = t;
    f.checks = failed[t];
    f.original_size = sets[t].size();
    const auto& names = failed[t];
    f.witness = minimize_witness(sets[t], [&](const PointSet& b) {
      for (const auto& name : check(b)) {
        if (std::find(names.begin(), names.end(), name) != names.end()) return true;
      }
      return false;
    });
    s.failures.push_back(std::move(f));
  }
  return s;
}

Json run_record_json(const RunRecord& r, bool timing) {
  Json j{{"index", r.index}, {"family", family_name(r.params.family)}};
  Json point = Json::object();
  for (const auto& [k, v] : r.point) point[k] = v;
  j["grid"] = point;
  if (r.skipped) {
    j["skipped"] = *r.skipped;
    return j;
  }
  j["params"] = construction_json([&] {
    Construction c;
    c.params = r.params;
    return c;
  }())["params"];
  if (r.spline_length) j["L"] = *r.spline_length;
  if (r.modulus) j["n"] = *r.modulus;
  j["profile"] = profile_json(r.profile);
  j["rho"] = r.rho;
  j["boundsOk"] = r.bounds_ok;
  j["failedBounds"] = r.failed_bounds;
  Json extras = Json::object();
  for (const auto& [k, v] : r.extras) extras[k] = v;
  j["extras"] = extras;
  if (timing) j["wallMs"] = r.wall_ms;
  return j;
}

Json fuzz_summary_json(const FuzzSummary& s) {
  Json failures = Json::array();
  for (const auto& f : s.failures) {
    failures.push_back(Json{{"trial", f.trial},
                            {"checks", f.checks},
                            {"originalSize", f.original_size},
                            {"witness", point_set_json(f.witness)}});
  }
  return Json{{"trials", s.trials}, {"seed", s.seed}, {"violations", s.violations}, {"failures", failures}};
}

}  // namespace sumset
