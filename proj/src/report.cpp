#include "tridef/report.hpp"

#include <cstdio>
#include <ctime>

namespace tridef::report {

std::string csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string display_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4g", x);
  return buf;
}

void write_summary_csv(std::ostream& os, std::span<const SummaryRow> rows) {
  os << "n,alpha,trials,mean,std_dev,violation_rate,theory_mean,seed\n";
  for (const SummaryRow& row : rows) {
    os << row.n << ',' << csv_number(row.alpha) << ',' << row.trials << ','
       << csv_number(row.mean) << ',' << csv_number(row.std_dev) << ','
       << csv_number(row.violation_rate) << ','
       << (row.theory_mean ? csv_number(*row.theory_mean) : std::string()) << ','
       << row.seed << '\n';
  }
}

void write_histogram_csv(std::ostream& os, const Histogram& histogram, std::size_t trials) {
  os << "bin_left,bin_right,count,density\n";
  for (std::size_t k = 0; k < histogram.bins(); ++k) {
    const double left = histogram.bin_edges[k];
    const double right = histogram.bin_edges[k + 1];
    const double width = right - left;
    const double density =
        static_cast<double>(histogram.counts[k]) / (static_cast<double>(trials) * width);
    os << csv_number(left) << ',' << csv_number(right) << ',' << histogram.counts[k] << ','
       << csv_number(density) << '\n';
  }
}

void write_theory_csv(std::ostream& os, std::span<const TheoryComparisonRow> rows) {
  os << "n,empirical_mean,theory_mean,empirical_std,theory_std_bound,"
        "empirical_violation_rate,chebyshev_bound\n";
  for (const TheoryComparisonRow& row : rows) {
    os << row.n << ',' << csv_number(row.empirical_mean_d2) << ','
       << csv_number(row.theory_mean_d2) << ',' << csv_number(row.empirical_std_d2) << ','
       << csv_number(row.theory_std_bound) << ',' << csv_number(row.violation_rate_d2) << ','
       << csv_number(row.chebyshev_bound) << '\n';
  }
}

void write_manifest(std::ostream& os, const std::map<std::string, std::string>& entries) {
  for (const auto& [key, value] : entries) {
    os << key << '=' << value << '\n';
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

}  // namespace tridef::report
