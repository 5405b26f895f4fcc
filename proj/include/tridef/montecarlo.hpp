#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "tridef/metrics.hpp"
#include "tridef/sampling.hpp"

namespace tridef {

/// Full sweep description as the CLI sees it.
struct ExperimentConfig {
  EnsembleKind ensemble = EnsembleKind::UnitSphere;
  std::vector<std::size_t> n_list;
  std::vector<double> alpha_list;
  std::size_t trials = 10000;
  std::uint64_t master_seed = kDefaultMasterSeed;
  std::size_t histogram_bins = 100;

  void validate() const;  // throws std::invalid_argument on any bad field
};

/// Single-pass summary of one cell. Standard deviation is the population
/// form (divide by N); at the trial counts used here the sample correction
/// is far below the reported precision.
struct SummaryStats {
  std::size_t count = 0;
  double mean = 0.0;
  double std_dev = 0.0;
  double violation_rate = 0.0;  // fraction of samples with defect < 0
  double min = std::numeric_limits<double>::quiet_NaN();
  double max = std::numeric_limits<double>::quiet_NaN();
};

/// Welford accumulator: stable single-pass mean/variance plus extrema.
class RunningStats {
 public:
  void add(double x);

  std::size_t count() const { return count_; }
  double mean() const { return mean_; }
  double variance_population() const;
  double std_dev_population() const;
  double min() const { return min_; }
  double max() const { return max_; }

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double min_ = std::numeric_limits<double>::quiet_NaN();
  double max_ = std::numeric_limits<double>::quiet_NaN();
};

/// Uniform-bin histogram with explicit edges (bins + 1, strictly
/// increasing). Samples outside the range land in underflow/overflow, so
/// counts + underflow + overflow always equals the number of additions.
struct Histogram {
  std::vector<double> bin_edges;
  std::vector<std::uint64_t> counts;
  std::uint64_t underflow = 0;
  std::uint64_t overflow = 0;

  static Histogram with_range(double lo, double hi, std::size_t bins);

  /// Bins spanning [min(samples), max(samples)]; a degenerate range is
  /// widened by 0.5 on each side so edges stay strictly increasing.
  static Histogram from_samples(std::span<const double> samples, std::size_t bins);

  void add(double x);
  std::uint64_t total() const;
  std::size_t bins() const { return counts.size(); }
};

/// The three commutator norms of one sampled triple, before any alpha power
/// is applied: ||[a,b]||, ||[b,c]||, ||[a,c]||. Collecting these once lets
/// every alpha be summarized from the same draws.
struct NormTriple {
  double ab = 0.0;
  double bc = 0.0;
  double ac = 0.0;
};

using TripleSource = std::function<MatrixTriple(std::uint64_t trial)>;

/// Runs trials 0..trials-1 against the source, possibly across threads
/// (threads == 0 picks the hardware count). Each trial writes only its own
/// slot, so the result is identical for every thread count and schedule.
std::vector<NormTriple> collect_norm_triples_from(const TripleSource& source, std::size_t trials,
                                                  int threads = 0);

std::vector<NormTriple> collect_norm_triples(const Ensemble& ensemble, std::size_t trials,
                                             std::uint64_t master_seed, int threads = 0);

struct CellConfig {
  EnsembleKind ensemble = EnsembleKind::UnitSphere;
  std::size_t n = 2;
  double alpha = 1.0;
  std::size_t trials = 10000;
  std::uint64_t master_seed = kDefaultMasterSeed;
  std::size_t histogram_bins = 100;
  int threads = 0;
  bool keep_samples = false;
};

struct CellResult {
  SummaryStats stats;
  Histogram histogram;
  std::vector<double> samples;  // per-trial defects, filled iff keep_samples
};

/// Defect statistics for one alpha over pre-collected norms. Samples are
/// folded in trial order, so the result does not depend on how the norms
/// were gathered.
CellResult summarize_defects(std::span<const NormTriple> norms, Alpha alpha,
                             std::size_t histogram_bins = 100, bool keep_samples = false);

/// One (ensemble, n, alpha) cell end to end: sample, fold, bin.
CellResult run_cell(const CellConfig& config);

struct ViolationPoint {
  std::size_t n = 0;
  double violation_rate = 0.0;
  std::optional<double> chebyshev_bound;  // unit-sphere alpha=2 only
};

std::vector<ViolationPoint> violation_curve(EnsembleKind kind, const std::vector<std::size_t>& n_list,
                                            double alpha, std::size_t trials,
                                            std::uint64_t master_seed, int threads = 0);

/// Side-by-side empirical vs closed-form values per dimension, for the
/// alpha=2 defect (mean, variance, violation rate) and the alpha=1 mean.
/// Unit-sphere only; other ensembles have no exact predictors.
struct TheoryComparisonRow {
  std::size_t n = 0;
  double empirical_mean_d2 = 0.0;
  double theory_mean_d2 = 0.0;
  double empirical_var_d2 = 0.0;
  double theory_var_bound = 0.0;
  double empirical_std_d2 = 0.0;
  double theory_std_bound = 0.0;
  double empirical_mean_d1 = 0.0;
  double theory_mean_d1 = 0.0;
  double violation_rate_d2 = 0.0;
  double chebyshev_bound = 0.0;
};

std::vector<TheoryComparisonRow> theory_comparison(EnsembleKind kind,
                                                   const std::vector<std::size_t>& n_list,
                                                   std::size_t trials, std::uint64_t master_seed,
                                                   int threads = 0);

}  // namespace tridef
