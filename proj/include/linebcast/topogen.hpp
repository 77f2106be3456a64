#pragma once

#include <cstdint>
#include <string>

#include "linebcast/network.hpp"

namespace linebcast {

enum class GenMode { Uniform, ExpGap, AdvA, AdvB };

// How the source index is chosen for generated networks. Random draws
// uniformly from the interior indices {1, ..., N-2}.
struct SourcePolicy {
  enum class Kind { Random, Center, Fixed };
  Kind kind = Kind::Random;
  std::size_t index = 0;

  static SourcePolicy random() { return {}; }
  static SourcePolicy center() { return {Kind::Center, 0}; }
  static SourcePolicy fixed(std::size_t i) { return {Kind::Fixed, i}; }
};

// Parameters for one network family. Trials derive independent RNG streams
// from (seed, trial index), so batches regenerate identically in any order.
struct GenSpec {
  GenMode mode = GenMode::Uniform;
  std::size_t n = 2;
  double length = 1.0;    // uniform placement interval [0, length]
  double lambda = 1.0;    // exponential gap rate (nodes per meter)
  std::uint64_t seed = 0;
  SourcePolicy source_policy;
  // Two-hump layouts: the big gaps r1/r2 and the small offsets eps1/eps2.
  double r1 = 0.0;
  double r2 = 0.0;
  double eps1 = 0.0;
  double eps2 = 0.0;
};

// n i.i.d. uniform positions on [0, length], sorted; coincident draws are
// re-sampled. Same spec and trial always produce the same network.
LinearNetwork uniform_network(const GenSpec& spec, std::uint64_t trial = 0);

// x0 = 0 and i.i.d. exponential(lambda) gaps.
LinearNetwork exponential_gap_network(const GenSpec& spec, std::uint64_t trial = 0);

// Fixed four/five-node layouts where the simple rules overshoot:
//   AdvA: [0, r2, r2+eps1, r2+eps1+r1], source 1
//         (requires r1 >= r2 + eps1 + eps2)
//   AdvB: [0, r2, r2+eps1, r2+eps1+eps2, r2+eps1+eps2+r1], source 2
//         (requires r1 <= r2 + eps1 + eps2 and r1 + eps1 >= r2 + eps2)
LinearNetwork adversarial_network(const GenSpec& spec);

// Dispatch on spec.mode.
LinearNetwork generate(const GenSpec& spec, std::uint64_t trial = 0);

GenMode parse_gen_mode(const std::string& name);
SourcePolicy parse_source_policy(const std::string& text);

}  // namespace linebcast
