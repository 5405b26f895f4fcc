#include "tridef/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <thread>

#include "tridef/theory.hpp"

namespace tridef {

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (n_list.empty()) throw std::invalid_argument("at least one dimension is required");
  for (std::size_t n : n_list) {
    if (n < 2) throw std::invalid_argument("all dimensions must be at least 2");
  }
  if (alpha_list.empty()) throw std::invalid_argument("at least one alpha is required");
  for (double a : alpha_list) {
    if (!(std::isfinite(a) && a > 0.0)) throw std::invalid_argument("all alphas must be positive");
  }
  if (histogram_bins < 2) throw std::invalid_argument("histogram needs at least 2 bins");
}

void RunningStats::add(double x) {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
  if (count_ == 1) {
    min_ = x;
    max_ = x;
  } else {
    min_ = std::min(min_, x);
    max_ = std::max(max_, x);
  }
}

double RunningStats::variance_population() const {
  return count_ == 0 ? 0.0 : m2_ / static_cast<double>(count_);
}

double RunningStats::std_dev_population() const {
  return std::sqrt(variance_population());
}

Histogram Histogram::with_range(double lo, double hi, std::size_t bins) {
  if (bins < 2) throw std::invalid_argument("histogram needs at least 2 bins");
  if (!(hi > lo)) throw std::invalid_argument("histogram range must have hi > lo");
  Histogram h;
  h.bin_edges.resize(bins + 1);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t k = 0; k <= bins; ++k) {
    h.bin_edges[k] = lo + width * static_cast<double>(k);
  }
  h.bin_edges.back() = hi;  // pin the last edge against accumulated rounding
  h.counts.assign(bins, 0);
  return h;
}

Histogram Histogram::from_samples(std::span<const double> samples, std::size_t bins) {
  if (samples.empty()) throw std::invalid_argument("cannot bin an empty sample set");
  double lo = samples[0];
  double hi = samples[0];
  for (double x : samples) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  Histogram h = with_range(lo, hi, bins);
  for (double x : samples) h.add(x);
  return h;
}

void Histogram::add(double x) {
  const double lo = bin_edges.front();
  const double hi = bin_edges.back();
  if (x < lo) {
    ++underflow;
    return;
  }
  if (x > hi) {
    ++overflow;
    return;
  }
  const std::size_t nbins = counts.size();
  auto idx = static_cast<std::size_t>((x - lo) / (hi - lo) * static_cast<double>(nbins));
  if (idx >= nbins) idx = nbins - 1;  // x == hi lands in the last (closed) bin
  ++counts[idx];
}

std::uint64_t Histogram::total() const {
  std::uint64_t sum = underflow + overflow;
  for (std::uint64_t c : counts) sum += c;
  return sum;
}

std::vector<NormTriple> collect_norm_triples_from(const TripleSource& source, std::size_t trials,
                                                  int threads) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");

  std::vector<NormTriple> out;
  try {
    out.resize(trials);
  } catch (const std::bad_alloc&) {
    throw std::runtime_error("trial buffer allocation failed; 0 of " + std::to_string(trials) +
                             " trials completed");
  }

  unsigned worker_count = threads > 0 ? static_cast<unsigned>(threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
  worker_count = static_cast<unsigned>(std::min<std::size_t>(worker_count, trials));

  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      const MatrixTriple triple = source(t);
      out[t] = NormTriple{commutator_norm(triple.a, triple.b),
                          commutator_norm(triple.b, triple.c),
                          commutator_norm(triple.a, triple.c)};
    }
  };

  if (worker_count <= 1) {
    run_range(0, trials);
    return out;
  }

  const std::size_t chunk = (trials + worker_count - 1) / worker_count;
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(worker_count);
  for (unsigned w = 0; w < worker_count; ++w) {
    const std::size_t begin = std::min<std::size_t>(w * chunk, trials);
    const std::size_t end = std::min<std::size_t>(begin + chunk, trials);
    workers.emplace_back([&, w, begin, end] {
      try {
        run_range(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& worker : workers) worker.join();
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return out;
}

std::vector<NormTriple> collect_norm_triples(const Ensemble& ensemble, std::size_t trials,
                                             std::uint64_t master_seed, int threads) {
  return collect_norm_triples_from(
      [&ensemble, master_seed](std::uint64_t trial) {
        return sample_triple(ensemble, master_seed, trial);
      },
      trials, threads);
}

CellResult summarize_defects(std::span<const NormTriple> norms, Alpha alpha,
                             std::size_t histogram_bins, bool keep_samples) {
  if (norms.empty()) throw std::invalid_argument("cannot summarize zero trials");

  std::vector<double> defects(norms.size());
  for (std::size_t t = 0; t < norms.size(); ++t) {
    defects[t] = defect_from_norms(norms[t].ab, norms[t].bc, norms[t].ac, alpha).defect;
  }

  RunningStats stats;
  std::size_t violations = 0;
  for (double d : defects) {
    stats.add(d);
    if (d < 0.0) ++violations;
  }

  CellResult result;
  result.stats.count = stats.count();
  result.stats.mean = stats.mean();
  result.stats.std_dev = stats.std_dev_population();
  result.stats.violation_rate = static_cast<double>(violations) / static_cast<double>(stats.count());
  result.stats.min = stats.min();
  result.stats.max = stats.max();
  result.histogram = Histogram::from_samples(defects, histogram_bins);
  if (keep_samples) result.samples = std::move(defects);
  return result;
}

CellResult run_cell(const CellConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (config.histogram_bins < 2) throw std::invalid_argument("histogram needs at least 2 bins");
  const Ensemble ensemble(config.ensemble, config.n);
  const Alpha alpha(config.alpha);
  const auto norms = collect_norm_triples(ensemble, config.trials, config.master_seed, config.threads);
  return summarize_defects(norms, alpha, config.histogram_bins, config.keep_samples);
}

std::vector<ViolationPoint> violation_curve(EnsembleKind kind, const std::vector<std::size_t>& n_list,
                                            double alpha, std::size_t trials,
                                            std::uint64_t master_seed, int threads) {
  if (n_list.empty()) throw std::invalid_argument("violation curve needs at least one dimension");
  const Alpha a(alpha);
  std::vector<ViolationPoint> points;
  points.reserve(n_list.size());
  for (std::size_t n : n_list) {
    const auto norms = collect_norm_triples(Ensemble(kind, n), trials, master_seed, threads);
    const CellResult cell = summarize_defects(norms, a);
    ViolationPoint point;
    point.n = n;
    point.violation_rate = cell.stats.violation_rate;
    if (kind == EnsembleKind::UnitSphere && alpha == 2.0) {
      point.chebyshev_bound = theory::chebyshev_violation_bound(n);
    }
    points.push_back(std::move(point));
  }
  return points;
}

std::vector<TheoryComparisonRow> theory_comparison(EnsembleKind kind,
                                                   const std::vector<std::size_t>& n_list,
                                                   std::size_t trials, std::uint64_t master_seed,
                                                   int threads) {
  if (kind != EnsembleKind::UnitSphere) {
    throw std::invalid_argument("theory comparison is defined for the unit-sphere ensemble only; "
                                "the closed-form moments hold there");
  }
  if (n_list.empty()) throw std::invalid_argument("theory comparison needs at least one dimension");

  std::vector<TheoryComparisonRow> rows;
  rows.reserve(n_list.size());
  for (std::size_t n : n_list) {
    const auto norms = collect_norm_triples(Ensemble(kind, n), trials, master_seed, threads);
    const CellResult d2 = summarize_defects(norms, Alpha(2.0));
    const CellResult d1 = summarize_defects(norms, Alpha(1.0));
    const theory::Defect2Moments moments = theory::defect2_moments(kind, n);

    TheoryComparisonRow row;
    row.n = n;
    row.empirical_mean_d2 = d2.stats.mean;
    row.theory_mean_d2 = moments.expected;
    row.empirical_var_d2 = d2.stats.std_dev * d2.stats.std_dev;
    row.theory_var_bound = moments.variance_upper_bound;
    row.empirical_std_d2 = d2.stats.std_dev;
    row.theory_std_bound = std::sqrt(moments.variance_upper_bound);
    row.empirical_mean_d1 = d1.stats.mean;
    row.theory_mean_d1 = theory::expected_norm_alpha1(n);
    row.violation_rate_d2 = d2.stats.violation_rate;
    row.chebyshev_bound = theory::chebyshev_violation_bound(n);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace tridef
