#include "linebcast/protocol.hpp"

#include <algorithm>
#include <stdexcept>

namespace linebcast {

bool node_on_reception(NodeState& state, const Reception& event) {
  state.informed = true;
  if (state.transmitted) return false;
  const double adjacent_gap = event.from_left ? state.known_left_gap : state.known_right_gap;
  if (!(adjacent_gap > 0.0) || event.distance != adjacent_gap) {
    return false;  // not the relay from the adjacent neighbor; stay quiet
  }
  state.transmitted = true;
  state.chosen_range = event.from_left ? state.known_right_gap : state.known_left_gap;
  return state.chosen_range > 0.0;
}

ProtocolTrace run_protocol(const LinearNetwork& net) {
  const std::size_t n = net.size();
  const std::size_t s = net.source();

  std::vector<NodeState> nodes(n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i].known_left_gap = i > 0 ? net.gap(i - 1) : 0.0;
    nodes[i].known_right_gap = i + 1 < n ? net.gap(i) : 0.0;
  }

  ProtocolTrace trace;
  nodes[s].informed = true;
  nodes[s].transmitted = true;
  nodes[s].chosen_range = std::max(nodes[s].known_left_gap, nodes[s].known_right_gap);
  std::vector<Transmission> current{{s, nodes[s].chosen_range}};

  while (!current.empty()) {
    std::vector<Transmission> next;
    // All transmissions in a round observe only prior-round state; receptions
    // are processed per node after the whole round is collected.
    for (const Transmission& tx : current) {
      const double xt = net.position(tx.node);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == tx.node) continue;
        const double d = j > tx.node ? net.position(j) - xt : xt - net.position(j);
        if (d > tx.range) continue;
        const Reception event{j > tx.node, d};
        if (node_on_reception(nodes[j], event)) {
          next.push_back({j, nodes[j].chosen_range});
        }
      }
    }
    std::sort(next.begin(), next.end(),
              [](const Transmission& a, const Transmission& b) { return a.node < b.node; });
    trace.rounds.push_back(std::move(current));
    current = std::move(next);
  }

  std::vector<double> ranges(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    ranges[i] = nodes[i].chosen_range;
    if (!nodes[i].informed) {
      throw std::logic_error("protocol: broadcast did not reach node " + std::to_string(i));
    }
  }
  trace.assignment = RangeAssignment(std::move(ranges));
  return trace;
}

}  // namespace linebcast
