#include "linebcast/experiments.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "linebcast/assign.hpp"
#include "linebcast/io.hpp"
#include "linebcast/rng.hpp"
#include "linebcast/topogen.hpp"

namespace linebcast {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

bool wants(const ExperimentConfig& cfg, Algorithm a) {
  return std::find(cfg.algorithms.begin(), cfg.algorithms.end(), a) != cfg.algorithms.end();
}

std::size_t nodes_for(const ExperimentConfig& cfg, double lambda) {
  const auto n = static_cast<long long>(std::llround(lambda * cfg.length));
  if (n < 3) {
    throw std::invalid_argument("lambda: lambda*length must round to at least 3 nodes");
  }
  return static_cast<std::size_t>(n);
}

void check_feasible(const LinearNetwork& net, const RangeAssignment& r, const char* what) {
  if (!validate_broadcast(net, r).all_informed()) {
    throw std::logic_error(std::string("experiments: infeasible ") + what + " assignment");
  }
}

TrialRecord run_one(const ExperimentConfig& cfg, double lambda, std::uint64_t point_seed,
                    std::uint64_t trial) {
  GenSpec gs;
  gs.mode = cfg.gap_model == GapModel::Uniform ? GenMode::Uniform : GenMode::ExpGap;
  gs.n = nodes_for(cfg, lambda);
  gs.length = cfg.length;
  gs.lambda = lambda;
  gs.seed = point_seed;
  gs.source_policy = SourcePolicy::random();
  const LinearNetwork net = generate(gs, trial);

  TrialRecord rec;
  rec.trial = trial;
  rec.n = static_cast<std::uint32_t>(net.size());
  rec.source = static_cast<std::uint32_t>(net.source());
  rec.cost_optimal = rec.cost_suboptimal = rec.cost_distributed = kNan;
  rec.bm_distance = kNan;

  const bool audit_this = cfg.audit || trial % 100 == 0;
  if (wants(cfg, Algorithm::Distributed)) {
    const RangeAssignment r = distributed_assign(net);
    rec.cost_distributed = assignment_cost(r, cfg.alpha);
    if (audit_this) check_feasible(net, r, "distributed");
  }
  if (wants(cfg, Algorithm::Suboptimal)) {
    const SuboptimalResult r = suboptimal_assign(net, cfg.alpha);
    rec.cost_suboptimal = r.cost;
    if (audit_this) check_feasible(net, r.assignment, "suboptimal");
  }
  if (wants(cfg, Algorithm::Optimal)) {
    const OptimalResult r = optimal_assign(net, cfg.alpha);
    rec.cost_optimal = r.cost;
    rec.bm_present = r.bm.has_value();
    if (r.bm) rec.bm_distance = net.distance(*r.bm, net.source());
    if (audit_this) check_feasible(net, r.assignment, "optimal");
  }
  return rec;
}

}  // namespace

std::vector<TrialRecord> run_trials(const ExperimentConfig& cfg, std::size_t lambda_index) {
  if (lambda_index >= cfg.lambdas.size()) {
    throw std::invalid_argument("lambda: index out of range");
  }
  if (cfg.trials < 1) throw std::invalid_argument("trials: must be at least 1");
  const double lambda = cfg.lambdas[lambda_index];
  nodes_for(cfg, lambda);  // reject degenerate densities before spawning workers
  const std::uint64_t point_seed = substream(cfg.seed, static_cast<std::uint64_t>(lambda_index));

  std::vector<TrialRecord> records(static_cast<std::size_t>(cfg.trials));
  std::string error;
  if (cfg.workers == 1) {
    for (int t = 0; t < cfg.trials; ++t) {
      records[t] = run_one(cfg, lambda, point_seed, static_cast<std::uint64_t>(t));
    }
  } else {
    const int threads = cfg.workers <= 0 ? omp_get_max_threads() : cfg.workers;
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (int t = 0; t < cfg.trials; ++t) {
      try {
        records[t] = run_one(cfg, lambda, point_seed, static_cast<std::uint64_t>(t));
      } catch (const std::exception& e) {
#pragma omp critical
        if (error.empty()) error = e.what();
      }
    }
    if (!error.empty()) throw std::runtime_error(error);
  }
  return records;
}

namespace {

struct MeanStderr {
  double mean = 0.0;
  double std_error = 0.0;
};

MeanStderr mean_stderr(const std::vector<TrialRecord>& records, double TrialRecord::*field) {
  const std::size_t n = records.size();
  double sum = 0.0;
  for (const TrialRecord& r : records) sum += r.*field;
  const double mean = sum / static_cast<double>(n);
  if (n < 2) return {mean, 0.0};
  double ss = 0.0;
  for (const TrialRecord& r : records) {
    const double d = r.*field - mean;
    ss += d * d;
  }
  const double var = ss / static_cast<double>(n - 1);
  return {mean, std::sqrt(var / static_cast<double>(n))};
}

double pick_cost(const TrialRecord& r, Algorithm a) {
  switch (a) {
    case Algorithm::Optimal:
      return r.cost_optimal;
    case Algorithm::Suboptimal:
      return r.cost_suboptimal;
    case Algorithm::Distributed:
      return r.cost_distributed;
  }
  return kNan;
}

double quantile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return kNan;
  const auto n = static_cast<double>(sorted.size());
  auto idx = static_cast<std::size_t>(std::ceil(p * n));
  if (idx > 0) --idx;
  if (idx >= sorted.size()) idx = sorted.size() - 1;
  return sorted[idx];
}

HistogramBins make_histogram(const std::vector<double>& values, int bins) {
  HistogramBins h;
  if (values.empty() || bins < 1) return h;
  double max = 0.0;
  for (double v : values) max = std::max(max, v);
  const double hi = max > 0.0 ? max : 1.0;
  h.edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int k = 0; k <= bins; ++k) {
    h.edges[k] = hi * static_cast<double>(k) / static_cast<double>(bins);
  }
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  for (double v : values) {
    auto idx = static_cast<std::size_t>(v / hi * bins);
    if (idx >= h.counts.size()) idx = h.counts.size() - 1;
    ++h.counts[idx];
  }
  return h;
}

SweepReport histogram_report(const ExperimentConfig& cfg, std::vector<double> values) {
  SweepReport report;
  report.seed = cfg.seed;
  report.length = cfg.length;
  report.contributing = values.size();
  report.histogram = make_histogram(values, cfg.bins);
  std::sort(values.begin(), values.end());
  report.max_value = values.empty() ? kNan : values.back();
  report.q50 = quantile(values, 0.50);
  report.q90 = quantile(values, 0.90);
  report.q95 = quantile(values, 0.95);
  report.q99 = quantile(values, 0.99);
  report.no_bm_fraction = kNan;
  report.max_bm_distance = kNan;
  return report;
}

}  // namespace

SweepReport run_density_sweep(const ExperimentConfig& cfg) {
  SweepReport report;
  report.seed = cfg.seed;
  report.length = cfg.length;
  report.no_bm_fraction = kNan;
  report.max_bm_distance = kNan;
  report.max_value = kNan;
  report.q50 = report.q90 = report.q95 = report.q99 = kNan;

  for (std::size_t li = 0; li < cfg.lambdas.size(); ++li) {
    const double lambda = cfg.lambdas[li];
    const std::vector<TrialRecord> records = run_trials(cfg, li);
    for (Algorithm a : {Algorithm::Optimal, Algorithm::Suboptimal, Algorithm::Distributed}) {
      if (!wants(cfg, a)) continue;
      double TrialRecord::*field = a == Algorithm::Optimal      ? &TrialRecord::cost_optimal
                                   : a == Algorithm::Suboptimal ? &TrialRecord::cost_suboptimal
                                                                : &TrialRecord::cost_distributed;
      const MeanStderr ms = mean_stderr(records, field);
      report.curve.push_back(
          {lambda, algorithm_name(a), ms.mean, ms.std_error, records.size()});
    }
    const std::size_t n = nodes_for(cfg, lambda);
    for (double pc : cfg.pc_list) {
      const IdenticalRange r = identical_range(pc, lambda, cfg.length);
      const double cost = static_cast<double>(n) * cfg.alpha.pow(r.exact);
      char label[64];
      std::snprintf(label, sizeof label, "identical(pc=%g)", pc);
      report.curve.push_back({lambda, label, cost, 0.0, records.size()});
    }
    if (cfg.alpha.is_integral()) {
      report.curve.push_back({lambda, "distributed-analytic",
                              expected_distributed_cost(n, lambda, cfg.alpha), 0.0,
                              records.size()});
    }
  }
  return report;
}

SweepReport diff_histogram(const ExperimentConfig& cfg, DiffPair pair) {
  if (cfg.lambdas.size() != 1) {
    throw std::invalid_argument("lambda: diff_histogram expects exactly one density");
  }
  Algorithm a = Algorithm::Distributed;
  Algorithm b = Algorithm::Optimal;
  if (pair == DiffPair::SuboptimalVsOptimal) a = Algorithm::Suboptimal;
  if (pair == DiffPair::DistributedVsSuboptimal) b = Algorithm::Suboptimal;
  if (!wants(cfg, a) || !wants(cfg, b)) {
    throw std::invalid_argument("algorithms: requested pair not in the configured set");
  }

  const std::vector<TrialRecord> records = run_trials(cfg, 0);
  std::vector<double> values;
  values.reserve(records.size());
  for (const TrialRecord& r : records) {
    values.push_back(normalized_difference(pick_cost(r, a), pick_cost(r, b)));
  }
  return histogram_report(cfg, std::move(values));
}

SweepReport bm_histogram(const ExperimentConfig& cfg) {
  if (cfg.lambdas.size() != 1) {
    throw std::invalid_argument("lambda: bm_histogram expects exactly one density");
  }
  if (!wants(cfg, Algorithm::Optimal)) {
    throw std::invalid_argument("algorithms: bm_histogram needs the optimal algorithm");
  }
  const std::vector<TrialRecord> records = run_trials(cfg, 0);
  std::vector<double> values;
  std::uint64_t absent = 0;
  for (const TrialRecord& r : records) {
    if (r.bm_present) {
      values.push_back(r.bm_distance);
    } else {
      ++absent;
    }
  }
  SweepReport report = histogram_report(cfg, std::move(values));
  report.no_bm_fraction = static_cast<double>(absent) / static_cast<double>(records.size());
  report.max_bm_distance = report.contributing > 0 ? report.max_value : kNan;
  return report;
}

namespace {

void emit_csv(const SweepReport& report, std::ostream& out) {
  if (!report.curve.empty()) {
    out << "lambda,algorithm,mean_cost,stderr,trials,seed\n";
    for (const CurveRow& row : report.curve) {
      out << format_double(row.lambda) << ',' << row.algorithm << ','
          << format_double(row.mean_cost) << ',' << format_double(row.std_error) << ','
          << row.trials << ',' << report.seed << '\n';
    }
    return;
  }
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t k = 0; k < report.histogram.counts.size(); ++k) {
    out << format_double(report.histogram.edges[k]) << ','
        << format_double(report.histogram.edges[k + 1]) << ',' << report.histogram.counts[k]
        << '\n';
  }
}

void emit_json_number(std::ostream& out, double v) {
  if (std::isnan(v)) {
    out << "null";
  } else {
    out << format_double(v);
  }
}

void emit_json(const SweepReport& report, std::ostream& out) {
  out << "{\"seed\":" << report.seed << ",\"length\":" << format_double(report.length);
  if (!report.curve.empty()) {
    out << ",\"curve\":[";
    for (std::size_t i = 0; i < report.curve.size(); ++i) {
      const CurveRow& row = report.curve[i];
      if (i > 0) out << ',';
      out << "{\"lambda\":" << format_double(row.lambda) << ",\"algorithm\":\"" << row.algorithm
          << "\",\"mean_cost\":" << format_double(row.mean_cost)
          << ",\"stderr\":" << format_double(row.std_error) << ",\"trials\":" << row.trials
          << '}';
    }
    out << ']';
  } else {
    out << ",\"histogram\":{\"edges\":[";
    for (std::size_t i = 0; i < report.histogram.edges.size(); ++i) {
      if (i > 0) out << ',';
      out << format_double(report.histogram.edges[i]);
    }
    out << "],\"counts\":[";
    for (std::size_t i = 0; i < report.histogram.counts.size(); ++i) {
      if (i > 0) out << ',';
      out << report.histogram.counts[i];
    }
    out << "]},\"contributing\":" << report.contributing << ",\"max\":";
    emit_json_number(out, report.max_value);
    out << ",\"q50\":";
    emit_json_number(out, report.q50);
    out << ",\"q90\":";
    emit_json_number(out, report.q90);
    out << ",\"q95\":";
    emit_json_number(out, report.q95);
    out << ",\"q99\":";
    emit_json_number(out, report.q99);
    out << ",\"no_bm_fraction\":";
    emit_json_number(out, report.no_bm_fraction);
    out << ",\"max_bm_distance\":";
    emit_json_number(out, report.max_bm_distance);
  }
  out << "}\n";
}

}  // namespace

void emit_report(const SweepReport& report, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::Csv) {
    emit_csv(report, out);
  } else {
    emit_json(report, out);
  }
  if (!out) throw io_error("report: write failed");
}

void emit_report(const SweepReport& report, ReportFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error(path + ": cannot open for writing");
  emit_report(report, format, out);
  out.flush();
  if (!out) throw io_error(path + ": write failed");
}

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Optimal:
      return "optimal";
    case Algorithm::Suboptimal:
      return "suboptimal";
    case Algorithm::Distributed:
      return "distributed";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "optimal") return Algorithm::Optimal;
  if (name == "suboptimal") return Algorithm::Suboptimal;
  if (name == "distributed") return Algorithm::Distributed;
  throw std::invalid_argument("algo: expected optimal|suboptimal|distributed, got '" + name +
                              "'");
}

DiffPair parse_diff_pair(const std::string& name) {
  if (name == "distributed-optimal") return DiffPair::DistributedVsOptimal;
  if (name == "suboptimal-optimal") return DiffPair::SuboptimalVsOptimal;
  if (name == "distributed-suboptimal") return DiffPair::DistributedVsSuboptimal;
  throw std::invalid_argument(
      "pair: expected distributed-optimal|suboptimal-optimal|distributed-suboptimal, got '" +
      name + "'");
}

}  // namespace linebcast
