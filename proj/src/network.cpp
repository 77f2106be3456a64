#include "linebcast/network.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace linebcast {

PathLoss::PathLoss(double alpha) : alpha_(alpha) {
  if (!(alpha >= 2.0 && alpha <= 6.0)) {
    throw std::invalid_argument("alpha: path-loss exponent must be in [2, 6], got " +
                                std::to_string(alpha));
  }
  int_alpha_ = static_cast<int>(alpha);
  integral_ = static_cast<double>(int_alpha_) == alpha;
}

double PathLoss::pow(double r) const noexcept {
  if (integral_) {
    double p = 1.0;
    for (int k = 0; k < int_alpha_; ++k) p *= r;
    return p;
  }
  return std::pow(r, alpha_);
}

LinearNetwork::LinearNetwork(std::vector<double> positions, std::size_t source)
    : positions_(std::move(positions)), source_(source) {
  if (positions_.size() < 2) {
    throw std::invalid_argument("positions: need at least 2 nodes, got " +
                                std::to_string(positions_.size()));
  }
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    if (!std::isfinite(positions_[i])) {
      throw std::invalid_argument("positions: non-finite coordinate at index " +
                                  std::to_string(i));
    }
    if (i > 0 && !(positions_[i - 1] < positions_[i])) {
      throw std::invalid_argument("positions: must be strictly increasing at index " +
                                  std::to_string(i));
    }
  }
  if (source_ >= positions_.size()) {
    throw std::invalid_argument("source: index " + std::to_string(source_) +
                                " out of range for " + std::to_string(positions_.size()) +
                                " nodes");
  }
}

double LinearNetwork::distance(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) {
    throw std::out_of_range("distance: node index out of range");
  }
  return i < j ? positions_[j] - positions_[i] : positions_[i] - positions_[j];
}

RangeAssignment::RangeAssignment(std::vector<double> r) : ranges(std::move(r)) {
  for (double v : ranges) {
    if (!(v >= 0.0)) throw std::invalid_argument("ranges: every range must be >= 0");
  }
}

SideMinima min_positive_ranges(const LinearNetwork& net) {
  const std::size_t n = net.size();
  const std::size_t s = net.source();
  SideMinima out;
  out.m.assign(n, 0.0);
  for (std::size_t i = 1; i < s; ++i) out.m[i] = net.gap(i - 1);
  for (std::size_t i = s + 1; i + 1 < n; ++i) out.m[i] = net.gap(i);
  out.source_left = s > 0 ? net.gap(s - 1) : 0.0;
  out.source_right = s + 1 < n ? net.gap(s) : 0.0;
  return out;
}

double assignment_cost(const RangeAssignment& r, PathLoss a) {
  double total = 0.0;
  for (double v : r.ranges) total += a.pow(v);
  return total;
}

bool CoverageResult::all_informed() const noexcept {
  for (bool b : informed) {
    if (!b) return false;
  }
  return true;
}

CoverageResult validate_broadcast(const LinearNetwork& net, const RangeAssignment& r) {
  const std::size_t n = net.size();
  CoverageResult out;
  out.informed.assign(n, false);
  out.informed[net.source()] = true;

  // Sweep the frontier: nodes informed in the previous sweep transmit once.
  std::vector<std::size_t> frontier{net.source()};
  std::vector<std::size_t> next;
  while (!frontier.empty()) {
    next.clear();
    for (std::size_t i : frontier) {
      const double range = i < r.ranges.size() ? r.ranges[i] : 0.0;
      if (range <= 0.0) continue;
      const double xi = net.position(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (out.informed[j]) continue;
        const double d = j > i ? net.position(j) - xi : xi - net.position(j);
        if (d <= range) {
          out.informed[j] = true;
          next.push_back(j);
        }
      }
    }
    if (!next.empty()) ++out.rounds;
    frontier.swap(next);
  }
  return out;
}

RangeAssignment edge_source_assignment(const LinearNetwork& net) {
  if (!net.source_is_edge()) {
    throw std::invalid_argument("source: edge_source_assignment requires the source at an end");
  }
  const std::size_t n = net.size();
  std::vector<double> ranges(n, 0.0);
  if (net.source() == 0) {
    for (std::size_t i = 0; i + 1 < n; ++i) ranges[i] = net.gap(i);
  } else {
    for (std::size_t i = 1; i < n; ++i) ranges[i] = net.gap(i - 1);
  }
  return RangeAssignment(std::move(ranges));
}

}  // namespace linebcast
