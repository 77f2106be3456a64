#pragma once

#include <cstddef>
#include <vector>

#include "linebcast/network.hpp"

namespace linebcast {

// Exhaustive ground truth for small networks. Each node's candidate ranges
// are 0 plus its distances to every other node; in a minimum-energy
// assignment no other radius can help, so the enumeration is complete.
struct OracleConfig {
  std::size_t max_n = 8;  // enumeration guard, capped at 10
  PathLoss alpha{2.0};
  int workers = 0;  // 0: all hardware threads, 1: serial reference path
};

struct OracleResult {
  RangeAssignment assignment;
  double cost = 0.0;
};

// Minimum-cost feasible assignment over the candidate grid. Ties resolve to
// the lexicographically smallest range vector; the result is identical for
// any worker count.
OracleResult brute_force_optimal(const LinearNetwork& net, const OracleConfig& cfg);

// Search over explicit per-node candidate sets (each must contain 0). Used by
// brute_force_optimal and by tests that probe finer grids.
OracleResult search_candidates(const LinearNetwork& net,
                               const std::vector<std::vector<double>>& candidates, PathLoss alpha,
                               int workers);

}  // namespace linebcast
