#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sumset/constructions.hpp"
#include "sumset/report_json.hpp"
#include "sumset/rng.hpp"
#include "sumset/sumset.hpp"

namespace sumset {

/// Flat `key = value` text; list values in brackets, e.g. `m = [2, 3]`.
///
///   family       geometric | ruzsa | random | gap | higher   (required)
///   maxH         largest h profiled (>= 3, default 3)
///   output       path prefix; writes <prefix>.csv and <prefix>.jsonl
///   parallelism  worker count (0: SUMSET_THREADS or hardware)
///   timing       true | false; adds a wall_ms column
///   grid keys    n base m K Kexp p seed k d h alpha
///
/// Kexp sets K = m^Kexp (ruzsa, random) or K = (k^d)^Kexp (gap) and
/// overrides K. Grid points are the Cartesian product of the listed values,
/// first key outermost, in the order above.
struct SweepConfig {
  Family family = Family::ruzsa;
  std::vector<std::pair<std::string, std::vector<std::string>>> grid;
  unsigned max_h = 3;
  std::string output;
  unsigned parallelism = 0;
  bool timing = false;
};

/// Throws ParseError on malformed lines, unknown keys or bad values.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig load_sweep_config(const std::string& path);

struct RunRecord {
  std::size_t index = 0;
  ConstructionParams params;
  std::map<std::string, std::string> point;  // grid values as written
  std::optional<std::string> skipped;        // reason
  std::optional<std::int64_t> spline_length;
  std::optional<std::int64_t> modulus;
  SumsetProfile profile;
  std::vector<double> rho;  // rho_h = |(h+1)A| / |hA|^{(h+1)/h}, h = 1 .. maxH-1
  bool bounds_ok = false;
  std::vector<std::string> failed_bounds;
  std::vector<std::pair<std::string, std::uint64_t>> extras;
  double wall_ms = 0.0;
};

struct SweepResult {
  std::vector<RunRecord> records;  // grid order
  std::size_t skipped = 0;
  std::string csv;
  std::string jsonl;

  bool all_bounds_hold() const;
};

/// Every grid point in parallel; records and output text are in grid order
/// so the bytes do not depend on scheduling.
SweepResult run_sweep(const SweepConfig& config);
/// Writes <output>.csv and <output>.jsonl; throws std::runtime_error when a
/// file cannot be written.
void write_sweep(const SweepResult& result, const std::string& prefix);

std::vector<std::string> sweep_csv_header(const SweepConfig& config);

/// Up to size_max elements (at least one); infinite coordinates uniform in
/// [-span, span], finite ones uniform in [0, n).
PointSet random_point_set(const GroupSpec& g, std::size_t size_max, std::int64_t span, SplitMix64& rng);

/// Names of every checked property that fails on A: bound_suite up to
/// max_h, the shadow identity for h = 2..max_h, the tuple-embedding
/// projections and the triangle statistics. Empty means all hold.
std::vector<std::string> failing_checks(const PointSet& a, unsigned max_h);

/// Greedily drops elements while `still_fails` stays true.
PointSet minimize_witness(const PointSet& a, const std::function<bool(const PointSet&)>& still_fails);

struct FuzzOptions {
  std::int64_t span = 16;
  unsigned max_h = 4;
  unsigned workers = 0;
  std::size_t minimize_limit = 5;
  /// Replaces failing_checks; used to exercise the reporting path.
  std::function<std::vector<std::string>(const PointSet&)> checker;
};

struct FuzzFailure {
  std::uint64_t trial = 0;
  std::vector<std::string> checks;
  std::size_t original_size = 0;
  PointSet witness{GroupSpec::integers(1)};
};

struct FuzzSummary {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t violations = 0;  // failing trials
  std::vector<FuzzFailure> failures;

  bool ok() const { return violations == 0; }
};

/// Trial t samples from SplitMix64::derive(seed, t). Throws
/// std::invalid_argument for trials == 0 or size_max == 0.
FuzzSummary fuzz_check(const GroupSpec& group, std::uint64_t trials, std::size_t size_max, std::uint64_t seed,
                       const FuzzOptions& options = {});

Json run_record_json(const RunRecord& r, bool timing);
Json fuzz_summary_json(const FuzzSummary& s);

}  // namespace sumset
