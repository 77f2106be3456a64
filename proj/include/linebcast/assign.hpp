#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "linebcast/network.hpp"

namespace linebcast {

// Per-node coverage past the source. cov(i) = M(i) - d(s, i): how far beyond
// the source node i's mandatory transmission reaches on the opposite side.
// best_left / best_right are the argmax nodes over each side (the source
// participates once per side, with its duty gap as the coverage value);
// reach_right / reach_left are the extreme opposite-side nodes those
// transmissions cover, defaulting to the source itself.
struct CoverageAnalysis {
  std::vector<double> cov;  // cov[source] is a placeholder; see the two fields below
  double cov_source_left = 0.0;
  double cov_source_right = 0.0;
  std::size_t best_left = 0;   // in [1, source]; == source means the source's left duty
  std::size_t best_right = 0;  // in [source, n-2]
  std::size_t reach_right = 0;  // largest j >= s with d(s,j) <= cov(best_left)
  std::size_t reach_left = 0;   // smallest j <= s with d(s,j) <= cov(best_right)
};

// Requires an interior source. Argmax ties break toward the node nearest the
// source; boundary coverage is inclusive (exact <= on stored values).
CoverageAnalysis opposite_coverage(const LinearNetwork& net, const SideMinima& minima);

// Linear-time assignment: every node relays at its minimum range except that
// the side with the better opposite coverage may silence the near nodes on
// the other side. Diagnostics carry both branch costs and the silenced set.
struct SuboptimalResult {
  RangeAssignment assignment;
  double cost = 0.0;
  double cost_right = 0.0;  // silence-right-of-source branch
  double cost_left = 0.0;   // silence-left-of-source branch
  double cost_star = 0.0;   // no silencing: every node at its minimum range
  bool right_branch = true;
  std::vector<std::size_t> silenced;
};

SuboptimalResult suboptimal_assign(const LinearNetwork& net, PathLoss a);

// Prefix energies of the relay chains.
//   to_source[i]: cost of delivering data from the source to node i through
//                 the nodes in between (0 at the source).
//   to_end[i]:    cost of delivering data from node i to the end of the line
//                 on its own side. The source has one value per side.
struct CostArrays {
  std::vector<double> to_source;
  std::vector<double> to_end;  // to_end[source] is a placeholder
  double to_end_source_left = 0.0;
  double to_end_source_right = 0.0;
};

CostArrays build_cost_arrays(const LinearNetwork& net, const SideMinima& minima, PathLoss a);

// Frontier state of the quadratic search: for a candidate transmitter b, the
// last node its radius reaches on its own side (same_side) and on the far
// side of the source (other_side). other_side == source means the radius
// covers no strict opposite-side node yet. For b == source, same_side is the
// right-hand frontier and other_side the left-hand one.
struct ReceiverPair {
  std::size_t same_side = 0;
  std::size_t other_side = 0;
};

struct ReceiverMatrix {
  std::vector<ReceiverPair> cols;
};

// Initial frontiers, with each candidate's radius set to
// max(d(b, reach_left), d(b, reach_right)) from the coverage analysis.
ReceiverMatrix init_receiver_matrix(const LinearNetwork& net, const CoverageAnalysis& coverage);

// Minimum-energy assignment. bm, when present, is the single node whose range
// exceeds its minimum (everyone else relays at the minimum or stays silent);
// bm absent means the linear-time assignment was already optimal.
struct OptimalResult {
  RangeAssignment assignment;
  double cost = 0.0;
  std::optional<std::size_t> bm;
  std::optional<ReceiverPair> bm_receivers;
};

OptimalResult optimal_assign(const LinearNetwork& net, PathLoss a);

// Local rule: the source covers both adjacent gaps, every other interior node
// covers its gap away from the source, end nodes stay silent.
RangeAssignment distributed_assign(const LinearNetwork& net);

// Common radius keeping a network of density lambda and length len connected
// with probability at least pc under exponential inter-node gaps. exact is
// the closed-form bound, approx its log-form approximation (good to <1% for
// lambda*len >= 100 and pc in [0.85, 0.999]).
struct IdenticalRange {
  double exact = 0.0;
  double approx = 0.0;
};

IdenticalRange identical_range(double pc, double lambda, double length);

// Closed-form expected cost of the distributed rule over networks with i.i.d.
// exponential(lambda) gaps and an interior source: alpha!/lambda^alpha *
// (n - 1 - 2^-alpha). Integer alpha only.
double expected_distributed_cost(std::size_t n, double lambda, PathLoss a);

// (max - min) / min of two positive costs.
double normalized_difference(double c1, double c2);

}  // namespace linebcast
