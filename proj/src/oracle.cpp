#include "linebcast/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace linebcast {

namespace {

struct Best {
  double cost = std::numeric_limits<double>::infinity();
  std::uint64_t combo = 0;  // mixed-radix rank; node 0 is the most significant digit
  bool found = false;
};

// Feasibility without allocation: the informed set is always a contiguous
// index interval around the source (every coverage interval contains its
// transmitter), so expand [lo, hi] until it stops growing. Coverage is
// compared in distance form (x_j - x_i <= R(i)), the same subtraction the
// candidate ranges came from, so boundary hits stay exact.
bool covers_all(const std::vector<double>& x, std::size_t source, const double* ranges,
                std::size_t n) {
  std::size_t lo = source;
  std::size_t hi = source;
  bool grew = true;
  while (grew && !(lo == 0 && hi + 1 == n)) {
    grew = false;
    if (lo > 0) {
      for (std::size_t i = lo; i <= hi; ++i) {
        if (x[i] - x[lo - 1] <= ranges[i]) {
          --lo;
          grew = true;
          break;
        }
      }
    }
    if (hi + 1 < n) {
      for (std::size_t i = lo; i <= hi; ++i) {
        if (x[hi + 1] - x[i] <= ranges[i]) {
          ++hi;
          grew = true;
          break;
        }
      }
    }
  }
  return lo == 0 && hi + 1 == n;
}

// Scans ranks [begin, end); keeps the cheapest feasible combo, first-found on
// cost ties, which is the lexicographically smallest range vector.
Best scan_range(const LinearNetwork& net, const std::vector<std::vector<double>>& candidates,
                const std::vector<std::vector<double>>& powers, std::uint64_t begin,
                std::uint64_t end) {
  const std::size_t n = net.size();
  const auto& x = net.positions();
  std::vector<std::size_t> digits(n, 0);
  std::vector<double> ranges(n, 0.0);

  Best best;
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    std::uint64_t rest = rank;
    double cost = 0.0;
    for (std::size_t i = n; i-- > 0;) {
      const std::size_t d = rest % candidates[i].size();
      rest /= candidates[i].size();
      digits[i] = d;
      cost += powers[i][d];
    }
    if (cost >= best.cost) continue;
    for (std::size_t i = 0; i < n; ++i) ranges[i] = candidates[i][digits[i]];
    if (covers_all(x, net.source(), ranges.data(), n)) {
      best.cost = cost;
      best.combo = rank;
      best.found = true;
    }
  }
  return best;
}

RangeAssignment decode(const std::vector<std::vector<double>>& candidates, std::uint64_t rank) {
  const std::size_t n = candidates.size();
  std::vector<double> ranges(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    ranges[i] = candidates[i][rank % candidates[i].size()];
    rank /= candidates[i].size();
  }
  return RangeAssignment(std::move(ranges));
}

}  // namespace

OracleResult search_candidates(const LinearNetwork& net,
                               const std::vector<std::vector<double>>& candidates, PathLoss alpha,
                               int workers) {
  const std::size_t n = net.size();
  if (candidates.size() != n) {
    throw std::invalid_argument("candidates: need one candidate set per node");
  }

  std::uint64_t total = 1;
  std::vector<std::vector<double>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (candidates[i].empty()) throw std::invalid_argument("candidates: empty set");
    total *= candidates[i].size();
    powers[i].reserve(candidates[i].size());
    for (double r : candidates[i]) powers[i].push_back(alpha.pow(r));
  }

  Best best;
  if (workers == 1) {
    best = scan_range(net, candidates, powers, 0, total);
  } else {
    const int threads = workers <= 0 ? omp_get_max_threads() : workers;
    const int chunks = threads * 4;
    const std::uint64_t step = (total + chunks - 1) / chunks;
    std::vector<Best> partial(chunks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int c = 0; c < chunks; ++c) {
      const std::uint64_t begin = std::min<std::uint64_t>(total, step * c);
      const std::uint64_t end = std::min<std::uint64_t>(total, begin + step);
      partial[c] = scan_range(net, candidates, powers, begin, end);
    }
    // Merge in chunk order: ties resolve to the smallest rank, so the result
    // is identical whatever the worker count.
    for (const Best& p : partial) {
      if (!p.found) continue;
      if (!best.found || p.cost < best.cost || (p.cost == best.cost && p.combo < best.combo)) {
        best = p;
      }
    }
  }

  if (!best.found) {
    // Cannot happen: every node covering the whole line is always a candidate.
    throw std::logic_error("oracle: no feasible assignment in candidate grid");
  }
  OracleResult out;
  out.assignment = decode(candidates, best.combo);
  out.cost = best.cost;
  return out;
}

OracleResult brute_force_optimal(const LinearNetwork& net, const OracleConfig& cfg) {
  if (cfg.max_n > 10) {
    throw std::invalid_argument("max_n: enumeration guard allows at most 10");
  }
  const std::size_t n = net.size();
  if (n > cfg.max_n) {
    throw std::invalid_argument("net: " + std::to_string(n) + " nodes exceed the oracle cap of " +
                                std::to_string(cfg.max_n));
  }

  std::vector<std::vector<double>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double>& c = candidates[i];
    c.push_back(0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) c.push_back(net.distance(i, j));
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  return search_candidates(net, candidates, cfg.alpha, cfg.workers);
}

}  // namespace linebcast
