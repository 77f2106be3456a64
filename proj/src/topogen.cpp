#include "linebcast/topogen.hpp"

#include <algorithm>
#include <stdexcept>

#include "linebcast/rng.hpp"

namespace linebcast {

namespace {

std::size_t pick_source(Xoshiro256ss& rng, const SourcePolicy& policy, std::size_t n) {
  switch (policy.kind) {
    case SourcePolicy::Kind::Random:
      if (n < 3) {
        throw std::invalid_argument("source: random interior source needs n >= 3");
      }
      return 1 + static_cast<std::size_t>(rng.below(n - 2));
    case SourcePolicy::Kind::Center:
      return n / 2;
    case SourcePolicy::Kind::Fixed:
      if (policy.index >= n) {
        throw std::invalid_argument("source: fixed index out of range");
      }
      return policy.index;
  }
  throw std::logic_error("source: unknown policy");
}

bool strictly_increasing(const std::vector<double>& x) {
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i - 1] < x[i])) return false;
  }
  return true;
}

}  // namespace

LinearNetwork uniform_network(const GenSpec& spec, std::uint64_t trial) {
  if (spec.n < 2) throw std::invalid_argument("n: uniform mode needs n >= 2");
  if (!(spec.length > 0.0)) throw std::invalid_argument("length: must be positive");

  Xoshiro256ss rng(substream(spec.seed, trial));
  std::vector<double> x(spec.n);
  do {
    for (double& v : x) v = rng.uniform() * spec.length;
    std::sort(x.begin(), x.end());
  } while (!strictly_increasing(x));  // coincident draws: redraw the whole set
  const std::size_t source = pick_source(rng, spec.source_policy, spec.n);
  return LinearNetwork(std::move(x), source);
}

LinearNetwork exponential_gap_network(const GenSpec& spec, std::uint64_t trial) {
  if (spec.n < 2) throw std::invalid_argument("n: expgap mode needs n >= 2");
  if (!(spec.lambda > 0.0)) throw std::invalid_argument("lambda: must be positive");

  Xoshiro256ss rng(substream(spec.seed, trial));
  std::vector<double> x(spec.n);
  x[0] = 0.0;
  for (std::size_t i = 1; i < spec.n; ++i) x[i] = x[i - 1] + rng.exponential(spec.lambda);
  const std::size_t source = pick_source(rng, spec.source_policy, spec.n);
  return LinearNetwork(std::move(x), source);
}

LinearNetwork adversarial_network(const GenSpec& spec) {
  if (!(spec.r1 > 0.0 && spec.r2 > 0.0 && spec.eps1 > 0.0) || !(spec.eps2 >= 0.0)) {
    throw std::invalid_argument("r1/r2/eps1: adversarial gaps must be positive");
  }
  if (spec.mode == GenMode::AdvA) {
    if (!(spec.r1 >= spec.r2 + spec.eps1 + spec.eps2)) {
      throw std::invalid_argument("adv_a: requires r1 >= r2 + eps1 + eps2");
    }
    std::vector<double> x{0.0, spec.r2, spec.r2 + spec.eps1, spec.r2 + spec.eps1 + spec.r1};
    return LinearNetwork(std::move(x), 1);
  }
  if (spec.mode == GenMode::AdvB) {
    if (!(spec.eps2 > 0.0)) {
      throw std::invalid_argument("eps2: adv_b needs a positive eps2 gap");
    }
    if (!(spec.r1 <= spec.r2 + spec.eps1 + spec.eps2)) {
      throw std::invalid_argument("adv_b: requires r1 <= r2 + eps1 + eps2");
    }
    if (!(spec.r1 + spec.eps1 >= spec.r2 + spec.eps2)) {
      throw std::invalid_argument("adv_b: requires r1 + eps1 >= r2 + eps2");
    }
    const double base = spec.r2 + spec.eps1 + spec.eps2;
    std::vector<double> x{0.0, spec.r2, spec.r2 + spec.eps1, base, base + spec.r1};
    return LinearNetwork(std::move(x), 2);
  }
  throw std::invalid_argument("mode: adversarial_network needs adv_a or adv_b");
}

LinearNetwork generate(const GenSpec& spec, std::uint64_t trial) {
  switch (spec.mode) {
    case GenMode::Uniform:
      return uniform_network(spec, trial);
    case GenMode::ExpGap:
      return exponential_gap_network(spec, trial);
    case GenMode::AdvA:
    case GenMode::AdvB:
      return adversarial_network(spec);
  }
  throw std::logic_error("mode: unknown generator mode");
}

GenMode parse_gen_mode(const std::string& name) {
  if (name == "uniform") return GenMode::Uniform;
  if (name == "expgap") return GenMode::ExpGap;
  if (name == "adv_a") return GenMode::AdvA;
  if (name == "adv_b") return GenMode::AdvB;
  throw std::invalid_argument("mode: expected uniform|expgap|adv_a|adv_b, got '" + name + "'");
}

SourcePolicy parse_source_policy(const std::string& text) {
  if (text == "random") return SourcePolicy::random();
  if (text == "center") return SourcePolicy::center();
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(text, &pos);
    if (pos == text.size()) return SourcePolicy::fixed(static_cast<std::size_t>(v));
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("source: expected random|center|<index>, got '" + text + "'");
}

}  // namespace linebcast
