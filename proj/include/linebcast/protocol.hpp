#pragma once

#include <cstddef>
#include <vector>

#include "linebcast/network.hpp"

namespace linebcast {

// Everything a node knows: its own flags plus the distances to its adjacent
// neighbors. A missing neighbor (end node) is a gap of 0. The decision rule
// below sees nothing else, which is the whole point of the local protocol.
struct NodeState {
  bool informed = false;
  bool transmitted = false;
  double known_left_gap = 0.0;
  double known_right_gap = 0.0;
  double chosen_range = 0.0;
};

// What a node observes about one incoming transmission.
struct Reception {
  bool from_left = false;
  double distance = 0.0;
};

// Local rule: mark informed; when the transmission arrives from the adjacent
// neighbor on the arrival side (distance equals the known gap exactly),
// forward once at the gap on the other side. Returns true when the node
// fires a transmission this reception (chosen_range > 0).
bool node_on_reception(NodeState& state, const Reception& event);

struct Transmission {
  std::size_t node = 0;
  double range = 0.0;
};

// Synchronous rounds: round 0 is the source at max(left gap, right gap);
// afterwards every node fires one round after the relay reaches it. The
// emergent assignment always equals distributed_assign on the same network.
struct ProtocolTrace {
  std::vector<std::vector<Transmission>> rounds;
  RangeAssignment assignment;

  std::size_t total_rounds() const noexcept { return rounds.size(); }
};

ProtocolTrace run_protocol(const LinearNetwork& net);

}  // namespace linebcast
