// Command-line front end: runs defect sweeps over the matrix ensembles and
// writes CSV reports plus a flat key=value run manifest.
//
// Exit codes: 0 success, 2 usage error, 1 runtime failure.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tridef/matrix.hpp"
#include "tridef/metrics.hpp"
#include "tridef/montecarlo.hpp"
#include "tridef/report.hpp"
#include "tridef/sampling.hpp"
#include "tridef/theory.hpp"

namespace fs = std::filesystem;
using namespace tridef;

namespace {

struct CommonOptions {
  std::vector<std::size_t> n_list;
  std::vector<double> alpha_list;
  std::size_t trials = 10000;
  std::uint64_t seed = kDefaultMasterSeed;
  std::string ensemble_name;
  std::string out_dir = ".";
  int threads = 0;
  std::size_t bins = 100;
  std::size_t max_n = 0;  // 0 = no cap
};

EnsembleKind require_ensemble(const std::string& name) {
  const auto kind = parse_ensemble(name);
  if (!kind) {
    throw std::invalid_argument("unknown ensemble '" + name +
                                "' (expected unit-sphere, gaussian or rademacher)");
  }
  return *kind;
}

ExperimentConfig build_config(const CommonOptions& opt, EnsembleKind kind) {
  ExperimentConfig config;
  config.ensemble = kind;
  config.n_list = opt.n_list;
  if (opt.max_n > 0) {
    std::erase_if(config.n_list, [&](std::size_t n) { return n > opt.max_n; });
    if (config.n_list.empty()) {
      throw std::invalid_argument("--max-n " + std::to_string(opt.max_n) +
                                  " removes every requested dimension");
    }
  }
  config.alpha_list = opt.alpha_list;
  config.trials = opt.trials;
  config.master_seed = opt.seed;
  config.histogram_bins = opt.bins;
  config.validate();
  return config;
}

std::string join_numbers(const std::vector<std::size_t>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  return os.str();
}

std::string join_numbers(const std::vector<double>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << report::csv_number(values[i]);
  }
  return os.str();
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& writer) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  writer(os);
  os.flush();
  if (!os) throw std::runtime_error("failed while writing " + path.string());
}

fs::path prepare_out_dir(const std::string& out_dir) {
  fs::path dir(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string());
  return dir;
}

std::map<std::string, std::string> manifest_base(const char* command, const ExperimentConfig& config,
                                                 const CommonOptions& opt) {
  std::map<std::string, std::string> m;
  m["command"] = command;
  m["ensemble"] = std::string(to_string(config.ensemble));
  m["n_list"] = join_numbers(config.n_list);
  m["alpha_list"] = join_numbers(config.alpha_list);
  m["trials"] = std::to_string(config.trials);
  m["master_seed"] = std::to_string(config.master_seed);
  m["histogram_bins"] = std::to_string(config.histogram_bins);
  m["threads"] = std::to_string(opt.threads);
  m["version"] = report::kArtifactVersion;
  m["timestamp"] = report::utc_timestamp();
  m["out_dir"] = opt.out_dir;
  return m;
}

void finish_manifest(const fs::path& dir, std::map<std::string, std::string> manifest) {
  write_file(dir / "run_manifest.txt",
             [&](std::ostream& os) { report::write_manifest(os, manifest); });
}

std::optional<double> theory_mean_for(EnsembleKind kind, std::size_t n, double alpha) {
  const auto prediction = theory::predict(kind, n, alpha);
  if (!prediction) return std::nullopt;
  if (prediction->expected_quality != theory::Quality::Exact &&
      prediction->expected_quality != theory::Quality::LeadingOrder) {
    return std::nullopt;  // order-only values would mislead next to measurements
  }
  return prediction->expected_value;
}

int cmd_table1(const CommonOptions& opt) {
  const EnsembleKind kind = require_ensemble(opt.ensemble_name);
  const ExperimentConfig config = build_config(opt, kind);
  const fs::path dir = prepare_out_dir(opt.out_dir);

  std::printf("ensemble=%s trials=%zu seed=%llu\n", std::string(to_string(kind)).c_str(),
              config.trials, static_cast<unsigned long long>(config.master_seed));
  std::printf("%6s %7s %11s %11s %10s %12s\n", "n", "alpha", "mean", "std_dev", "viol_rate",
              "theory_mean");

  std::vector<report::SummaryRow> rows;
  rows.reserve(config.n_list.size() * config.alpha_list.size());
  for (std::size_t n : config.n_list) {
    const auto norms =
        collect_norm_triples(Ensemble(kind, n), config.trials, config.master_seed, opt.threads);
    for (double alpha : config.alpha_list) {
      const CellResult cell = summarize_defects(norms, Alpha(alpha), config.histogram_bins);
      report::SummaryRow row;
      row.n = n;
      row.alpha = alpha;
      row.trials = config.trials;
      row.mean = cell.stats.mean;
      row.std_dev = cell.stats.std_dev;
      row.violation_rate = cell.stats.violation_rate;
      row.theory_mean = theory_mean_for(kind, n, alpha);
      row.seed = config.master_seed;
      rows.push_back(row);

      std::printf("%6zu %7s %11s %11s %10s %12s\n", n, report::display_number(alpha).c_str(),
                  report::display_number(row.mean).c_str(),
                  report::display_number(row.std_dev).c_str(),
                  report::display_number(row.violation_rate).c_str(),
                  row.theory_mean ? report::display_number(*row.theory_mean).c_str() : "-");
    }
  }

  write_file(dir / "table1.csv",
             [&](std::ostream& os) { report::write_summary_csv(os, rows); });

  auto manifest = manifest_base("table1", config, opt);
  manifest["output.table1"] = (dir / "table1.csv").string();
  finish_manifest(dir, std::move(manifest));

  std::printf("wrote %s (%zu rows)\n", (dir / "table1.csv").c_str(), rows.size());
  return 0;
}

int cmd_histogram(const CommonOptions& opt) {
  const EnsembleKind kind = require_ensemble(opt.ensemble_name);
  if (opt.alpha_list.size() != 1) {
    throw std::invalid_argument("histogram takes exactly one --alpha value");
  }
  const ExperimentConfig config = build_config(opt, kind);
  const double alpha = config.alpha_list.front();
  const fs::path dir = prepare_out_dir(opt.out_dir);

  auto manifest = manifest_base("histogram", config, opt);

  for (std::size_t n : config.n_list) {
    const auto norms =
        collect_norm_triples(Ensemble(kind, n), config.trials, config.master_seed, opt.threads);
    const CellResult cell =
        summarize_defects(norms, Alpha(alpha), config.histogram_bins, /*keep_samples=*/true);

    std::size_t below_zero = 0;
    for (double d : cell.samples) {
      if (d < 0.0) ++below_zero;
    }
    const double mass_below_zero =
        static_cast<double>(below_zero) / static_cast<double>(cell.samples.size());

    const std::string name = "hist_n" + std::to_string(n) + ".csv";
    write_file(dir / name, [&](std::ostream& os) {
      report::write_histogram_csv(os, cell.histogram, config.trials);
    });
    manifest["output.hist_n" + std::to_string(n)] = (dir / name).string();

    std::printf("n=%zu: mean=%s std=%s viol_rate=%s mass_below_zero=%s -> %s\n", n,
                report::display_number(cell.stats.mean).c_str(),
                report::display_number(cell.stats.std_dev).c_str(),
                report::display_number(cell.stats.violation_rate).c_str(),
                report::display_number(mass_below_zero).c_str(), (dir / name).c_str());
  }

  finish_manifest(dir, std::move(manifest));
  return 0;
}

int cmd_theory(const CommonOptions& opt) {
  const EnsembleKind kind = require_ensemble(opt.ensemble_name);
  if (kind != EnsembleKind::UnitSphere) {
    throw std::invalid_argument(
        "the closed-form defect moments hold for the unit-sphere ensemble only; "
        "rerun with --ensemble unit-sphere");
  }
  const ExperimentConfig config = build_config(opt, kind);
  const fs::path dir = prepare_out_dir(opt.out_dir);

  const auto rows =
      theory_comparison(kind, config.n_list, config.trials, config.master_seed, opt.threads);

  std::printf("%6s %12s %12s %12s %14s %10s %11s\n", "n", "emp_mean", "theory_mean", "emp_std",
              "std_bound", "viol_rate", "cheb_bound");
  for (const auto& row : rows) {
    std::printf("%6zu %12s %12s %12s %14s %10s %11s\n", row.n,
                report::display_number(row.empirical_mean_d2).c_str(),
                report::display_number(row.theory_mean_d2).c_str(),
                report::display_number(row.empirical_std_d2).c_str(),
                report::display_number(row.theory_std_bound).c_str(),
                report::display_number(row.violation_rate_d2).c_str(),
                report::display_number(row.chebyshev_bound).c_str());
  }

  write_file(dir / "theory_vs_sim.csv",
             [&](std::ostream& os) { report::write_theory_csv(os, rows); });

  auto manifest = manifest_base("theory", config, opt);
  manifest["output.theory_vs_sim"] = (dir / "theory_vs_sim.csv").string();
  finish_manifest(dir, std::move(manifest));

  std::printf("wrote %s (%zu rows)\n", (dir / "theory_vs_sim.csv").c_str(), rows.size());
  return 0;
}

void print_matrix(const char* label, const Matrix& m) {
  std::printf("%s =\n", label);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    std::printf("  [");
    for (std::size_t j = 0; j < m.dim(); ++j) {
      std::printf(" %s", report::display_number(m(i, j)).c_str());
    }
    std::printf(" ]\n");
  }
}

int cmd_counterexample(double alpha_value) {
  const Alpha alpha(alpha_value);
  const Matrix a(2, {2.0, 1.0, 1.0, 1.0});
  const Matrix b = Matrix::identity(2);
  const Matrix c(2, {0.0, 1.0, 1.0, 0.0});

  std::printf("triangle-defect counterexample (n=2, alpha=%s):\n",
              report::display_number(alpha.value).c_str());
  print_matrix("A", a);
  print_matrix("B", b);
  print_matrix("C", c);

  const DefectSample sample = defect(a, b, c, alpha);
  std::printf("d(A,B) = %s\n", report::csv_number(sample.d_ab).c_str());
  std::printf("d(B,C) = %s\n", report::csv_number(sample.d_bc).c_str());
  std::printf("d(A,C) = %s\n", report::csv_number(sample.d_ac).c_str());
  std::printf("defect = %s\n", report::csv_number(sample.defect).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo study of the commutator-norm distance and its triangle defect"};
  app.require_subcommand(1);
  app.set_version_flag("--version", report::kArtifactVersion);

  const std::vector<std::size_t> default_table_n = {2, 3, 4, 5, 10, 25, 50, 100, 200, 500};
  const std::vector<std::size_t> default_hist_n = {2, 5, 10, 25, 50, 100};
  const std::vector<std::size_t> default_theory_n = {2, 3, 4, 5, 10, 25, 50, 100};

  CommonOptions table_opt;
  table_opt.n_list = default_table_n;
  table_opt.alpha_list = {0.5, 1.0, 2.0};
  table_opt.ensemble_name = "unit-sphere";

  CommonOptions hist_opt;
  hist_opt.n_list = default_hist_n;
  hist_opt.alpha_list = {1.0};
  hist_opt.ensemble_name = "gaussian";

  CommonOptions theory_opt;
  theory_opt.n_list = default_theory_n;
  theory_opt.alpha_list = {2.0};
  theory_opt.ensemble_name = "unit-sphere";

  double counterexample_alpha = 1.0;

  auto add_shared = [](CLI::App* sub, CommonOptions& opt, bool with_bins) {
    sub->add_option("--n", opt.n_list, "dimensions to run")->delimiter(',');
    sub->add_option("--trials", opt.trials, "Monte Carlo trials per cell");
    sub->add_option("--seed", opt.seed, "master seed for the substream generator");
    sub->add_option("--ensemble", opt.ensemble_name, "unit-sphere | gaussian | rademacher");
    sub->add_option("--out", opt.out_dir, "output directory for CSV files and the manifest");
    sub->add_option("--threads", opt.threads, "worker threads (0 = auto); never affects results");
    if (with_bins) sub->add_option("--bins", opt.bins, "histogram bin count (>= 2)");
  };

  CLI::App* table_cmd = app.add_subcommand(
      "table1", "summary grid: mean/std-dev/violation rate per (n, alpha) cell");
  add_shared(table_cmd, table_opt, false);
  table_cmd->add_option("--alpha", table_opt.alpha_list, "norm exponents")->delimiter(',');
  table_cmd->add_option("--max-n", table_opt.max_n, "skip dimensions above this cap (0 = none)");

  CLI::App* hist_cmd =
      app.add_subcommand("histogram", "per-dimension defect histograms as CSV");
  add_shared(hist_cmd, hist_opt, true);
  hist_cmd->add_option("--alpha", hist_opt.alpha_list, "norm exponent")->delimiter(',');

  CLI::App* theory_cmd = app.add_subcommand(
      "theory", "empirical vs closed-form defect moments (unit-sphere only)");
  add_shared(theory_cmd, theory_opt, false);

  CLI::App* counter_cmd = app.add_subcommand(
      "counterexample", "print the explicit n=2 triple violating the triangle inequality");
  counter_cmd->add_option("--alpha", counterexample_alpha, "norm exponent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(table_cmd)) return cmd_table1(table_opt);
    if (app.got_subcommand(hist_cmd)) return cmd_histogram(hist_opt);
    if (app.got_subcommand(theory_cmd)) return cmd_theory(theory_opt);
    if (app.got_subcommand(counter_cmd)) return cmd_counterexample(counterexample_alpha);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
