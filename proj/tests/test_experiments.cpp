#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "helpers.hpp"
#include "linebcast/assign.hpp"
#include "linebcast/experiments.hpp"
#include "linebcast/io.hpp"

using namespace linebcast;
using test_helpers::close;

namespace {

ExperimentConfig small_cfg() {
  ExperimentConfig cfg;
  cfg.length = 5000.0;
  cfg.lambdas = {0.01};
  cfg.trials = 150;
  cfg.seed = 42;
  return cfg;
}

}  // namespace

TEST_CASE("trial records are deterministic and worker-independent") {
  ExperimentConfig cfg = small_cfg();
  cfg.workers = 1;
  const std::vector<TrialRecord> serial = run_trials(cfg, 0);
  cfg.workers = 4;
  const std::vector<TrialRecord> parallel = run_trials(cfg, 0);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].n == parallel[i].n);
    CHECK(serial[i].source == parallel[i].source);
    CHECK(serial[i].cost_optimal == parallel[i].cost_optimal);
    CHECK(serial[i].cost_suboptimal == parallel[i].cost_suboptimal);
    CHECK(serial[i].cost_distributed == parallel[i].cost_distributed);
    CHECK(serial[i].bm_present == parallel[i].bm_present);
  }
}

TEST_CASE("per-trial cost ordering holds for every network") {
  ExperimentConfig cfg = small_cfg();
  cfg.trials = 300;
  cfg.audit = true;  // also revalidate every assignment
  for (const TrialRecord& r : run_trials(cfg, 0)) {
    CHECK(r.cost_optimal <= r.cost_suboptimal * (1 + 1e-12));
    CHECK(r.cost_suboptimal <= r.cost_distributed * (1 + 1e-12));
  }
}

TEST_CASE("distributed mean converges to the closed form") {
  ExperimentConfig cfg;
  cfg.gap_model = GapModel::ExponentialGap;
  cfg.lambdas = {0.1};
  cfg.length = 100.0;  // 10 nodes at this density
  cfg.trials = 10000;
  cfg.seed = 7;
  cfg.algorithms = {Algorithm::Distributed};
  const SweepReport report = run_density_sweep(cfg);
  REQUIRE(report.curve.size() == 2);  // measured + analytic reference
  CHECK(report.curve[0].algorithm == "distributed");
  CHECK(close(report.curve[1].mean_cost, 1750.0, 1e-12));
  CHECK(close(report.curve[0].mean_cost, 1750.0, 0.03));
}

TEST_CASE("sweep report shape") {
  ExperimentConfig cfg = small_cfg();
  cfg.lambdas = {0.01, 0.02};
  cfg.trials = 40;
  cfg.pc_list = {0.85};
  const SweepReport report = run_density_sweep(cfg);
  int algo_rows = 0;
  int identical_rows = 0;
  int analytic_rows = 0;
  for (const CurveRow& row : report.curve) {
    if (row.algorithm == "optimal" || row.algorithm == "suboptimal" ||
        row.algorithm == "distributed") {
      ++algo_rows;
    } else if (row.algorithm.rfind("identical", 0) == 0) {
      ++identical_rows;
    } else if (row.algorithm == "distributed-analytic") {
      ++analytic_rows;
    }
  }
  CHECK(algo_rows == 6);  // 2 densities x 3 algorithms
  CHECK(identical_rows == 2);
  CHECK(analytic_rows == 2);

  std::ostringstream csv;
  emit_report(report, ReportFormat::Csv, csv);
  const std::string text = csv.str();
  CHECK(text.rfind("lambda,algorithm,mean_cost,stderr,trials,seed\n", 0) == 0);
  int lines = 0;
  for (char c : text) lines += c == '\n' ? 1 : 0;
  CHECK(lines == 1 + 10);
}

TEST_CASE("identical assignments produce an all-zero histogram") {
  // Three-node networks: the linear pass always degenerates to the local
  // rule, so the pair differs by exactly zero on every trial.
  ExperimentConfig cfg;
  cfg.length = 100.0;
  cfg.lambdas = {0.03};
  cfg.trials = 200;
  cfg.seed = 3;
  const SweepReport report = diff_histogram(cfg, DiffPair::DistributedVsSuboptimal);
  CHECK(report.contributing == 200);
  CHECK(report.max_value == 0.0);
  CHECK(report.q99 == 0.0);
  REQUIRE(!report.histogram.counts.empty());
  CHECK(report.histogram.counts[0] == 200);
  std::uint64_t total = 0;
  for (auto c : report.histogram.counts) total += c;
  CHECK(total == report.contributing);
  for (std::size_t i = 1; i < report.histogram.edges.size(); ++i) {
    CHECK(report.histogram.edges[i - 1] < report.histogram.edges[i]);
  }
}

TEST_CASE("bm histogram and empty-histogram reports") {
  // On three-node networks no transmitter can beat the relay chain, so bm
  // never exists and the histogram stays empty.
  ExperimentConfig cfg;
  cfg.length = 100.0;
  cfg.lambdas = {0.03};
  cfg.trials = 120;
  cfg.seed = 4;
  const SweepReport report = bm_histogram(cfg);
  CHECK(report.no_bm_fraction == 1.0);
  CHECK(report.contributing == 0);
  CHECK(report.histogram.counts.empty());

  std::ostringstream csv;
  emit_report(report, ReportFormat::Csv, csv);
  CHECK(csv.str() == "bin_lo,bin_hi,count\n");  // header-only

  std::ostringstream json;
  emit_report(report, ReportFormat::Json, json);
  CHECK(json.str().find("\"no_bm_fraction\":1") != std::string::npos);
  CHECK(json.str().find("\"max\":null") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
  ExperimentConfig cfg = small_cfg();
  cfg.trials = 60;
  cfg.pc_list = {0.9};
  std::ostringstream a;
  emit_report(run_density_sweep(cfg), ReportFormat::Csv, a);
  std::ostringstream b;
  emit_report(run_density_sweep(cfg), ReportFormat::Csv, b);
  CHECK(a.str() == b.str());

  cfg.workers = 3;
  std::ostringstream c;
  emit_report(run_density_sweep(cfg), ReportFormat::Json, c);
  cfg.workers = 1;
  std::ostringstream d;
  emit_report(run_density_sweep(cfg), ReportFormat::Json, d);
  CHECK(c.str() == d.str());
}

TEST_CASE("config validation") {
  ExperimentConfig cfg = small_cfg();
  cfg.lambdas = {1e-5};  // rounds to zero nodes
  CHECK_THROWS_AS(run_trials(cfg, 0), std::invalid_argument);
  cfg = small_cfg();
  cfg.trials = 0;
  CHECK_THROWS_AS(run_trials(cfg, 0), std::invalid_argument);
  cfg = small_cfg();
  CHECK_THROWS_AS(run_trials(cfg, 1), std::invalid_argument);
  cfg = small_cfg();
  cfg.lambdas = {0.01, 0.02};
  CHECK_THROWS_AS(diff_histogram(cfg, DiffPair::DistributedVsOptimal), std::invalid_argument);
  cfg.lambdas = {0.01};
  cfg.algorithms = {Algorithm::Distributed};
  CHECK_THROWS_AS(diff_histogram(cfg, DiffPair::DistributedVsOptimal), std::invalid_argument);
  CHECK_THROWS_AS(bm_histogram(cfg), std::invalid_argument);
}

TEST_CASE("parsing helpers") {
  CHECK(parse_algorithm("optimal") == Algorithm::Optimal);
  CHECK_THROWS_AS(parse_algorithm("best"), std::invalid_argument);
  CHECK(parse_diff_pair("distributed-optimal") == DiffPair::DistributedVsOptimal);
  CHECK(parse_diff_pair("suboptimal-optimal") == DiffPair::SuboptimalVsOptimal);
  CHECK(parse_diff_pair("distributed-suboptimal") == DiffPair::DistributedVsSuboptimal);
  CHECK_THROWS_AS(parse_diff_pair("a-b"), std::invalid_argument);
  CHECK(algorithm_name(Algorithm::Suboptimal) == "suboptimal");
}
