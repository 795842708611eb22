#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumset/point_set.hpp"
#include "sumset/rational.hpp"

namespace sumset {

enum class Strategy { exact, greedy };
enum class Variant { h2, general_alpha, general_K };

std::string strategy_name(Strategy s);
std::string variant_name(Variant v);
Strategy parse_strategy(const std::string& s);
/// Accepts "h2", "alpha" and "K".
Variant parse_variant(const std::string& s);

struct SearchOptions {
  std::size_t exhaustive_limit = 20;
  unsigned workers = 0;  // 0: default_parallelism()
};

/// X subset of A with |X| >= (1 - delta)|A| and small |X + hA|, plus the two
/// large-subset Plunnecke bounds evaluated on it.
struct LargeSubset {
  PointSet x{GroupSpec::integers(1)};
  Strategy strategy = Strategy::exact;
  std::size_t min_size = 0;  // ceil((1 - delta)|A|)
  std::uint64_t cost = 0;    // |X + hA|
  double bound_K = 0.0;      // K^h / delta^{h-1} |A|
  double bound_alpha = 0.0;  // h alpha^{h/(h-1)} / delta^{1/(h-1)} |A|
  bool bound_K_holds = false;
  bool bound_alpha_holds = false;
};

/// exact: among all X with |X| >= ceil((1-delta)|A|) the one minimising
/// |X + hA|, ties to larger |X| then the lexicographically smallest element
/// list; requires |A| <= exhaustive_limit. greedy: repeatedly drop the
/// element whose removal shrinks |X + hA| most (ties drop the lex-largest).
/// Throws std::invalid_argument for delta outside (0, 1), h < 2, an empty A,
/// or an exact search above the limit.
LargeSubset plunnecke_large_subset(const PointSet& a, unsigned h, double delta, Strategy strategy,
                                   const SearchOptions& options = {});

/// ceil((1 - delta) n) robust to rounding in (1 - delta) n.
std::size_t large_subset_floor(double delta, std::size_t n);

struct ExtractOptions {
  SearchOptions search;
  bool force = false;  // extract even when the hypotheses fail
};

struct ExtractionReport {
  Variant variant = Variant::h2;
  Strategy strategy = Strategy::exact;
  unsigned h = 2;
  double M = 1.0;
  double delta = 0.0;

  std::uint64_t size_a = 0;
  std::uint64_t size_2a = 0;
  std::uint64_t size_ha = 0;     // |hA|
  std::uint64_t size_next = 0;   // |(h+1)A|
  Rational K;                    // |2A| / |A|
  Rational alpha;                // |hA| / |A|

  double m_max = 0.0;             // largest admissible M
  double hypothesis_bound = 0.0;  // required lower bound on |(h+1)A|
  bool hypothesis_holds = false;
  bool extracted = false;  // false: not-applicable report

  PointSet x{GroupSpec::integers(1)};
  PointSet y{GroupSpec::integers(1)};
  std::uint64_t x_cost = 0;  // |X + hA|
  std::uint64_t y_size = 0;
  std::uint64_t y_next = 0;  // |(h+1)Y|
  double large_subset_bound = 0.0;
  bool large_subset_bound_holds = false;

  double y_lower = 0.0;       // conclusion 1 window
  double y_upper = 0.0;
  double y_next_bound = 0.0;  // conclusion 2 right-hand side
  bool conclusion1_holds = false;
  bool conclusion2_holds = false;

  std::vector<std::string> notes;
};

/// Runs the inverse-theorem pipeline: check hypotheses, pick delta, find X
/// with the large-subset search, set Y = A \ X and evaluate both
/// conclusions. Failed hypotheses give a report with extracted = false.
ExtractionReport inverse_extract(const PointSet& a, unsigned h, double M, Variant variant, Strategy strategy,
                                 const ExtractOptions& options = {});

/// delta for each variant, equating the large-subset term with half of the
/// hypothesis lower bound.
double extraction_delta(Variant variant, unsigned h, double M, double K, double alpha, double n);

struct StabilityOptions {
  std::size_t exhaustive_limit = 18;
  unsigned workers = 0;
};

struct StabilityReport {
  Strategy strategy = Strategy::exact;
  std::uint64_t size_a = 0;
  std::uint64_t size_2a = 0;
  std::uint64_t size_3a = 0;
  double x = 0.0;  // |2A| = binom_real(x + 1, 2)
  std::optional<std::int64_t> x_integral;
  double macaulay_bound = 0.0;  // binom_real(x + 2, 3)
  double delta = 0.0;           // 1 - |3A| / macaulay_bound
  bool delta_clamped = false;
  double window_lo = 0.0;
  double window_hi = 0.0;

  bool found = false;
  PointSet y{GroupSpec::integers(1)};
  std::uint64_t y_size = 0;
  std::uint64_t y_2sum = 0;
  std::uint64_t y_3sum = 0;
  double y_ratio = 0.0;       // |3Y| / C(|Y| + 2, 3)
  double triple_bound = 0.0;  // (1 - 50 delta^{1/2}) C(|Y| + 2, 3)
  double x_y = 0.0;           // |2Y| = binom_real(x_y + 1, 2)
  bool size_window_holds = false;
  bool triple_bound_holds = false;
  bool delta_within_theorem = false;  // delta < 1/1152
  bool numerator_consistent = false;  // |3Y| <= binom_real(x_y + 2, 3)

  std::vector<std::string> notes;
};

/// Measures how far |3A| is from the Macaulay bound and searches the size
/// window for the most nearly dissociated Y.
StabilityReport stability_analyze(const PointSet& a, Strategy strategy, const StabilityOptions& options = {});

}  // namespace sumset
