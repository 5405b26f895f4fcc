#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "tridef/montecarlo.hpp"

namespace tridef::report {

inline constexpr const char* kArtifactVersion = "0.1.0";

/// Full round-trip precision (17 significant digits), C locale.
std::string csv_number(double x);

/// Console precision (4 significant digits).
std::string display_number(double x);

struct SummaryRow {
  std::size_t n = 0;
  double alpha = 0.0;
  std::size_t trials = 0;
  double mean = 0.0;
  double std_dev = 0.0;
  double violation_rate = 0.0;
  std::optional<double> theory_mean;  // blank column when absent
  std::uint64_t seed = 0;
};

// columns: n,alpha,trials,mean,std_dev,violation_rate,theory_mean,seed
void write_summary_csv(std::ostream& os, std::span<const SummaryRow> rows);

// columns: bin_left,bin_right,count,density  (density integrates to 1 over the binned range)
void write_histogram_csv(std::ostream& os, const Histogram& histogram, std::size_t trials);

// columns: n,empirical_mean,theory_mean,empirical_std,theory_std_bound,
//          empirical_violation_rate,chebyshev_bound
void write_theory_csv(std::ostream& os, std::span<const TheoryComparisonRow> rows);

/// Flat key=value lines, one per line, keys sorted (std::map order).
void write_manifest(std::ostream& os, const std::map<std::string, std::string>& entries);

std::string utc_timestamp();

}  // namespace tridef::report
