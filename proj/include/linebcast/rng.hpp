#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace linebcast {

// SplitMix64 output function. Used both as a one-shot hash for deriving
// substream seeds and as the seeding sequence for Xoshiro256ss below.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed for an independent stream identified by (seed, key). Streams for
// distinct keys are derived by hashing, never by advancing a shared state,
// so any subset of trials can be generated in any order.
constexpr std::uint64_t substream(std::uint64_t seed, std::uint64_t key) noexcept {
  return mix64(seed ^ mix64(key + 0x632be59bd9b4e019ULL));
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// xoshiro256** 1.0. Fixed algorithm, pure 64-bit integer arithmetic, so the
// raw stream is bit-identical on every platform for a given seed.
class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(std::uint64_t seed) noexcept {
    SplitMix64 sm(seed);
    for (auto& w : state_) w = sm.next();
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1), 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  // Exponential with the given rate. uniform() < 1 keeps the log argument
  // positive, so the result is always finite.
  double exponential(double rate) noexcept { return -std::log1p(-uniform()) / rate; }

  // Uniform integer in [0, n). Plain modulo; the bias is below 2^-50 for the
  // index ranges used here and keeps the draw sequence trivial to document.
  std::uint64_t below(std::uint64_t n) noexcept { return next() % n; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> state_;
};

}  // namespace linebcast
