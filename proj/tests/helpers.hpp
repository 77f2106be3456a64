#pragma once

#include <cmath>
#include <vector>

#include "linebcast/network.hpp"

namespace test_helpers {

inline linebcast::LinearNetwork make_net(std::vector<double> positions, std::size_t source) {
  return linebcast::LinearNetwork(std::move(positions), source);
}

// The five-node example used throughout: [0,1,3,4,7] with the source at 2.
inline linebcast::LinearNetwork five_node() {
  return make_net({0, 1, 3, 4, 7}, 2);
}

// Four-node two-hump layout: distributed overshoots the linear algorithm.
inline linebcast::LinearNetwork hump_a() {
  return make_net({0, 100, 101, 203}, 1);
}

// Five-node two-hump layout: one node must exceed its minimum range.
inline linebcast::LinearNetwork hump_b() {
  return make_net({0, 100, 101, 102, 203}, 2);
}

inline bool close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace test_helpers
