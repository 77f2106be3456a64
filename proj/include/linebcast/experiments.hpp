#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "linebcast/network.hpp"

namespace linebcast {

enum class Algorithm { Optimal, Suboptimal, Distributed };
enum class GapModel { Uniform, ExponentialGap };
enum class DiffPair { DistributedVsOptimal, SuboptimalVsOptimal, DistributedVsSuboptimal };

// Monte Carlo sweep parameters. Each (lambda index, trial index) pair derives
// its own RNG stream from the seed, so runs are reproducible byte-for-byte
// and independent of the worker count. The node count per point is
// round(lambda * length); sources are drawn uniformly from the interior.
struct ExperimentConfig {
  double length = 5000.0;
  std::vector<double> lambdas;
  int trials = 10000;
  PathLoss alpha{2.0};
  std::vector<double> pc_list;  // identical-range reference curves
  std::uint64_t seed = 0;
  std::vector<Algorithm> algorithms{Algorithm::Optimal, Algorithm::Suboptimal,
                                    Algorithm::Distributed};
  int workers = 0;  // 0: all hardware threads, 1: serial reference path
  int bins = 50;
  bool audit = false;  // revalidate every assignment instead of 1 in 100
  GapModel gap_model = GapModel::Uniform;
};

// One generated network's results. Costs are NaN for algorithms not run.
struct TrialRecord {
  std::uint64_t trial = 0;
  std::uint32_t n = 0;
  std::uint32_t source = 0;
  double cost_optimal = 0.0;
  double cost_suboptimal = 0.0;
  double cost_distributed = 0.0;
  bool bm_present = false;
  double bm_distance = 0.0;  // distance from bm to the source, when present
};

struct CurveRow {
  double lambda = 0.0;
  std::string algorithm;
  double mean_cost = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
};

struct HistogramBins {
  std::vector<double> edges;          // bins + 1 edges, strictly increasing
  std::vector<std::uint64_t> counts;  // sums to the number of binned values
};

struct SweepReport {
  std::uint64_t seed = 0;
  double length = 0.0;
  std::vector<CurveRow> curve;
  HistogramBins histogram;
  std::uint64_t contributing = 0;  // values that went into the histogram
  double max_value = 0.0;
  double q50 = 0.0, q90 = 0.0, q95 = 0.0, q99 = 0.0;
  double no_bm_fraction = 0.0;
  double max_bm_distance = 0.0;
};

// All trials for one density point, in trial order.
std::vector<TrialRecord> run_trials(const ExperimentConfig& cfg, std::size_t lambda_index);

// Mean cost per algorithm and density, plus identical-range reference rows
// per pc and the closed-form distributed expectation (integer alpha only).
SweepReport run_density_sweep(const ExperimentConfig& cfg);

// Histogram of per-trial normalized cost differences for one density
// (lambdas must hold exactly one entry).
SweepReport diff_histogram(const ExperimentConfig& cfg, DiffPair pair);

// Histogram of the bm-to-source distance over trials where bm exists, plus
// the fraction of trials without one.
SweepReport bm_histogram(const ExperimentConfig& cfg);

enum class ReportFormat { Csv, Json };

void emit_report(const SweepReport& report, ReportFormat format, std::ostream& out);
void emit_report(const SweepReport& report, ReportFormat format, const std::string& path);

std::string algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string& name);
DiffPair parse_diff_pair(const std::string& name);

}  // namespace linebcast
