// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mco {

// Deterministic random source. std::mt19937_64 has a fully specified output
// sequence, but the std distributions do not, so the draw functions below are
// spelled out by hand. Same seed, same platform-independent stream.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n). Lemire multiply-shift; slight modulo bias of
  // order n / 2^64 is irrelevant at the n used here and keeps the draw to a
  // single engine call, which keeps traces reproducible.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(eng_()) * n) >> 64);
  }

  // Uniform pick from a small list of candidates.
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(below(v.size()))];
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace mco
