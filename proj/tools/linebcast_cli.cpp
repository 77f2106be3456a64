// Command-line front end: network generation, range assignment, exhaustive
// certification, protocol simulation, and Monte Carlo sweeps. All output is
// machine-readable JSON/CSV with 0-based node indices.
//
// Exit codes: 0 success, 1 validation error, 2 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linebcast/assign.hpp"
#include "linebcast/experiments.hpp"
#include "linebcast/io.hpp"
#include "linebcast/network.hpp"
#include "linebcast/oracle.hpp"
#include "linebcast/protocol.hpp"
#include "linebcast/topogen.hpp"

namespace {

using namespace linebcast;

// stdout by default, a file when --out is given.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw io_error(path + ": cannot open for writing");
      path_ = path;
    }
  }
  std::ostream& stream() { return path_.empty() ? std::cout : file_; }
  void finish() {
    stream().flush();
    if (!stream()) throw io_error((path_.empty() ? "stdout" : path_) + ": write failed");
  }

 private:
  std::string path_;
  std::ofstream file_;
};

struct GenOptions {
  std::string mode = "uniform";
  std::size_t n = 2;
  double length = 5000.0;
  double lambda = 0.03;
  std::uint64_t seed = 0;
  std::string source = "random";
  double r1 = 0.0, r2 = 0.0, eps1 = 0.0, eps2 = 0.0;
  std::uint64_t count = 1;
  std::string out;
};

int run_gen(const GenOptions& o) {
  GenSpec spec;
  spec.mode = parse_gen_mode(o.mode);
  spec.n = o.n;
  spec.length = o.length;
  spec.lambda = o.lambda;
  spec.seed = o.seed;
  spec.source_policy = parse_source_policy(o.source);
  spec.r1 = o.r1;
  spec.r2 = o.r2;
  spec.eps1 = o.eps1;
  spec.eps2 = o.eps2;

  OutputTarget out(o.out);
  for (std::uint64_t trial = 0; trial < o.count; ++trial) {
    const LinearNetwork net = generate(spec, trial);
    write_network_json(out.stream(), net, o.seed);
  }
  out.finish();
  return 0;
}

struct AssignOptions {
  std::string algo;
  std::string net_path;
  double alpha = 2.0;
  std::optional<double> pc;
  std::optional<double> lambda;
  std::optional<double> length;
  std::string out;
};

int run_assign(const AssignOptions& o) {
  const LinearNetwork net = read_network_file(o.net_path);
  const PathLoss a(o.alpha);
  OutputTarget out(o.out);

  if (o.algo == "optimal") {
    const OptimalResult r = optimal_assign(net, a);
    write_assignment_json(out.stream(), r.assignment, r.cost, "optimal", r.bm);
  } else if (o.algo == "suboptimal") {
    const SuboptimalResult r = suboptimal_assign(net, a);
    write_assignment_json(out.stream(), r.assignment, r.cost, "suboptimal", std::nullopt);
  } else if (o.algo == "distributed") {
    const RangeAssignment r = distributed_assign(net);
    write_assignment_json(out.stream(), r, assignment_cost(r, a), "distributed", std::nullopt);
  } else if (o.algo == "identical") {
    if (!o.pc || !o.lambda || !o.length) {
      throw std::invalid_argument("pc/lambda/length: required for --algo identical");
    }
    const IdenticalRange r = identical_range(*o.pc, *o.lambda, *o.length);
    RangeAssignment assignment(std::vector<double>(net.size(), r.exact));
    write_assignment_json(out.stream(), assignment, assignment_cost(assignment, a), "identical",
                          std::nullopt);
  } else {
    throw std::invalid_argument("algo: expected optimal|suboptimal|distributed|identical, got '" +
                                o.algo + "'");
  }
  out.finish();
  return 0;
}

struct OracleOptions {
  std::string net_path;
  double alpha = 2.0;
  std::size_t max_n = 8;
  int workers = 0;
  std::string out;
};

// The single node allowed to exceed its minimum range, if any.
std::optional<std::size_t> find_bm(const LinearNetwork& net, const RangeAssignment& r) {
  const SideMinima minima = min_positive_ranges(net);
  for (std::size_t i = 0; i < net.size(); ++i) {
    const double floor = i == net.source() ? minima.max_duty() : minima.m[i];
    if (r.ranges[i] > floor) return i;
  }
  return std::nullopt;
}

int run_oracle(const OracleOptions& o) {
  const LinearNetwork net = read_network_file(o.net_path);
  OracleConfig cfg;
  cfg.alpha = PathLoss(o.alpha);
  cfg.max_n = o.max_n;
  cfg.workers = o.workers;
  const OracleResult r = brute_force_optimal(net, cfg);
  OutputTarget out(o.out);
  write_assignment_json(out.stream(), r.assignment, r.cost, "oracle", find_bm(net, r.assignment));
  out.finish();
  return 0;
}

struct ProtocolOptions {
  std::string net_path;
  std::string out;
};

int run_protocol_cmd(const ProtocolOptions& o) {
  const LinearNetwork net = read_network_file(o.net_path);
  const ProtocolTrace trace = run_protocol(net);
  OutputTarget out(o.out);
  write_protocol_json(out.stream(), trace);
  out.finish();
  return 0;
}

struct SweepOptions {
  double length = 5000.0;
  std::vector<double> lambdas{0.01, 0.02, 0.03};
  int trials = 10000;
  double alpha = 2.0;
  std::vector<double> pc_list;
  std::uint64_t seed = 0;
  std::vector<std::string> algos{"optimal", "suboptimal", "distributed"};
  int workers = 0;
  std::string gap_model = "uniform";
  std::string format = "csv";
  bool audit = false;
  std::string out;
};

ReportFormat parse_format(const std::string& name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw std::invalid_argument("format: expected csv|json, got '" + name + "'");
}

ExperimentConfig sweep_config(const SweepOptions& o) {
  ExperimentConfig cfg;
  cfg.length = o.length;
  cfg.lambdas = o.lambdas;
  cfg.trials = o.trials;
  cfg.alpha = PathLoss(o.alpha);
  cfg.pc_list = o.pc_list;
  cfg.seed = o.seed;
  cfg.algorithms.clear();
  for (const std::string& name : o.algos) cfg.algorithms.push_back(parse_algorithm(name));
  cfg.workers = o.workers;
  cfg.audit = o.audit;
  if (o.gap_model == "uniform") {
    cfg.gap_model = GapModel::Uniform;
  } else if (o.gap_model == "expgap") {
    cfg.gap_model = GapModel::ExponentialGap;
  } else {
    throw std::invalid_argument("gap-model: expected uniform|expgap, got '" + o.gap_model + "'");
  }
  return cfg;
}

int run_sweep(const SweepOptions& o) {
  const SweepReport report = run_density_sweep(sweep_config(o));
  OutputTarget out(o.out);
  emit_report(report, parse_format(o.format), out.stream());
  out.finish();
  return 0;
}

struct HistOptions {
  std::string kind = "diff";
  std::string pair = "distributed-optimal";
  double lambda = 0.03;
  SweepOptions base;  // shares length/trials/alpha/seed/workers/format/out
  int bins = 50;
};

int run_hist(const HistOptions& o) {
  SweepOptions base = o.base;
  base.lambdas = {o.lambda};
  ExperimentConfig cfg = sweep_config(base);
  cfg.bins = o.bins;
  SweepReport report;
  if (o.kind == "diff") {
    report = diff_histogram(cfg, parse_diff_pair(o.pair));
  } else if (o.kind == "bm") {
    report = bm_histogram(cfg);
  } else {
    throw std::invalid_argument("kind: expected diff|bm, got '" + o.kind + "'");
  }
  OutputTarget out(base.out);
  emit_report(report, parse_format(base.format), out.stream());
  out.finish();
  return 0;
}

void add_sweep_flags(CLI::App* cmd, SweepOptions& o) {
  cmd->add_option("--length", o.length, "network length in meters");
  cmd->add_option("--trials", o.trials, "trials per density point");
  cmd->add_option("--alpha", o.alpha, "path-loss exponent");
  cmd->add_option("--seed", o.seed, "base RNG seed");
  cmd->add_option("--algos", o.algos, "algorithms to run")->delimiter(',');
  cmd->add_option("--workers", o.workers, "worker threads (0 = all, 1 = serial)");
  cmd->add_option("--gap-model", o.gap_model, "uniform|expgap");
  cmd->add_option("--format", o.format, "csv|json");
  cmd->add_flag("--audit", o.audit, "revalidate every assignment");
  cmd->add_option("--out", o.out, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum-energy broadcast range assignment for nodes on a line"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate networks");
  gen_cmd->add_option("--mode", gen.mode, "uniform|expgap|adv_a|adv_b");
  gen_cmd->add_option("--n", gen.n, "node count");
  gen_cmd->add_option("--length", gen.length, "placement interval length (uniform)");
  gen_cmd->add_option("--lambda", gen.lambda, "gap rate in nodes per meter (expgap)");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--source", gen.source, "random|center|<index>");
  gen_cmd->add_option("--r1", gen.r1, "adversarial gap r1");
  gen_cmd->add_option("--r2", gen.r2, "adversarial gap r2");
  gen_cmd->add_option("--eps1", gen.eps1, "adversarial gap eps1");
  gen_cmd->add_option("--eps2", gen.eps2, "adversarial gap eps2");
  gen_cmd->add_option("--count", gen.count, "emit this many networks, one JSON per line");
  gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

  AssignOptions assign;
  CLI::App* assign_cmd = app.add_subcommand("assign", "compute a range assignment");
  assign_cmd->add_option("--algo", assign.algo, "optimal|suboptimal|distributed|identical")
      ->required();
  assign_cmd->add_option("--net", assign.net_path, "network JSON file")->required();
  assign_cmd->add_option("--alpha", assign.alpha, "path-loss exponent");
  assign_cmd->add_option("--pc", assign.pc, "connectivity probability (identical)");
  assign_cmd->add_option("--lambda", assign.lambda, "node density (identical)");
  assign_cmd->add_option("--length", assign.length, "network length (identical)");
  assign_cmd->add_option("--out", assign.out, "output file (default stdout)");

  OracleOptions oracle;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "exhaustive minimum-cost search");
  oracle_cmd->add_option("--net", oracle.net_path, "network JSON file")->required();
  oracle_cmd->add_option("--alpha", oracle.alpha, "path-loss exponent");
  oracle_cmd->add_option("--max-n", oracle.max_n, "node cap (<= 10)");
  oracle_cmd->add_option("--workers", oracle.workers, "worker threads (0 = all, 1 = serial)");
  oracle_cmd->add_option("--out", oracle.out, "output file (default stdout)");

  ProtocolOptions protocol;
  CLI::App* protocol_cmd = app.add_subcommand("protocol", "simulate the local relay protocol");
  protocol_cmd->add_option("--net", protocol.net_path, "network JSON file")->required();
  protocol_cmd->add_option("--out", protocol.out, "output file (default stdout)");

  SweepOptions sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo density sweep");
  sweep_cmd->add_option("--lambdas", sweep.lambdas, "density grid")->delimiter(',');
  sweep_cmd->add_option("--pc", sweep.pc_list, "identical-range reference curves")
      ->delimiter(',');
  add_sweep_flags(sweep_cmd, sweep);

  HistOptions hist;
  CLI::App* hist_cmd = app.add_subcommand("hist", "per-trial histograms");
  hist_cmd->add_option("--kind", hist.kind, "diff|bm");
  hist_cmd->add_option("--pair", hist.pair,
                       "distributed-optimal|suboptimal-optimal|distributed-suboptimal");
  hist_cmd->add_option("--lambda", hist.lambda, "density point");
  hist_cmd->add_option("--bins", hist.bins, "histogram bin count");
  add_sweep_flags(hist_cmd, hist.base);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (app.got_subcommand(gen_cmd)) return run_gen(gen);
    if (app.got_subcommand(assign_cmd)) return run_assign(assign);
    if (app.got_subcommand(oracle_cmd)) return run_oracle(oracle);
    if (app.got_subcommand(protocol_cmd)) return run_protocol_cmd(protocol);
    if (app.got_subcommand(sweep_cmd)) return run_sweep(sweep);
    if (app.got_subcommand(hist_cmd)) return run_hist(hist);
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
