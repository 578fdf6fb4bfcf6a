// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

// Literal-formula reimplementation of the model used as an independent
// cross-check. Everything here is written straight from the definitions
// (two-branch cost comparison, pairwise double loop, pow-based threshold,
// full scans) with no shared code paths or cached terms, so agreement with
// the library is evidence, not tautology. Deliberately slow.

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "core/model.hpp"

namespace oracle {

inline double received(const mco::UserProfile& u) {
  return u.transmit_power * u.channel_gain;
}

inline double interference(const mco::Scenario& s, const std::vector<int>& a,
                           std::size_t n) {
  double sum = 0.0;
  for (std::size_t m = 0; m < s.users.size(); ++m)
    if (m != n && a[m] == 1) sum += received(s.users[m]);
  return sum;
}

inline double rate(const mco::Scenario& s, const std::vector<int>& a, std::size_t n) {
  const mco::UserProfile& u = s.users[n];
  double sinr = received(u) / (u.background_power + interference(s, a, n));
  return s.bandwidth * std::log2(1.0 + sinr);
}

inline double local_cost(const mco::UserProfile& u) {
  double time = u.cycles / u.local_freq;
  double energy = u.energy_per_cycle * u.cycles;
  return u.weight_time * time + u.weight_energy * energy;
}

inline double cloud_cost(const mco::Scenario& s, const std::vector<int>& a,
                         std::size_t n) {
  const mco::UserProfile& u = s.users[n];
  double r = rate(s, a, n);
  double t_up = u.input_bits / r;
  double t_exec = u.cycles / u.cloud_freq;
  double e_up = u.transmit_power * u.input_bits / r;
  return u.weight_time * (t_up + t_exec) + u.weight_energy * e_up;
}

inline double user_cost(const mco::Scenario& s, const std::vector<int>& a,
                        std::size_t n) {
  return a[n] == 1 ? cloud_cost(s, a, n) : local_cost(s.users[n]);
}

inline double system_cost(const mco::Scenario& s, const std::vector<int>& a) {
  double sum = 0.0;
  for (std::size_t n = 0; n < s.users.size(); ++n) sum += user_cost(s, a, n);
  return sum;
}

// Offload iff the cloud branch is no worse than the local branch at the
// profile's interference. The decision route under test never evaluates
// either branch; it compares interference against a precomputed level.
inline bool prefers_offload(const mco::Scenario& s, const std::vector<int>& a,
                            std::size_t n) {
  return cloud_cost(s, a, n) <= local_cost(s.users[n]);
}

// Strict unilateral improvement by flipping user n, straight from the two
// branch costs.
inline bool flip_improves(const mco::Scenario& s, const std::vector<int>& a,
                          std::size_t n) {
  std::vector<int> b = a;
  b[n] ^= 1;
  return user_cost(s, b, n) < user_cost(s, a, n);
}

inline bool is_nash(const mco::Scenario& s, const std::vector<int>& a) {
  for (std::size_t n = 0; n < s.users.size(); ++n)
    if (flip_improves(s, a, n)) return false;
  return true;
}

inline double threshold(const mco::Scenario& s, std::size_t n) {
  const mco::UserProfile& u = s.users[n];
  double budget = local_cost(u) - u.weight_time * u.cycles / u.cloud_freq;
  if (budget <= 0.0) return -std::numeric_limits<double>::infinity();
  double exponent =
      (u.weight_time + u.weight_energy * u.transmit_power) * u.input_bits /
      (s.bandwidth * budget);
  return received(u) / (std::pow(2.0, exponent) - 1.0) - u.background_power;
}

// Duplicates the library's stand-in convention for never-offload users so
// the pairwise potential below is comparable value for value.
inline double large_constant(const mco::Scenario& s) {
  double max_term = 0.0, max_pair = 0.0;
  for (const mco::UserProfile& u : s.users) {
    double p = received(u);
    if (p * p > max_pair) max_pair = p * p;
  }
  for (std::size_t n = 0; n < s.users.size(); ++n) {
    double level = oracle::threshold(s, n);
    if (!std::isfinite(level)) continue;
    double term = std::fabs(received(s.users[n]) * level);
    if (term > max_term) max_term = term;
  }
  return 1000.0 * (max_term > max_pair ? max_term : max_pair);
}

inline double potential(const mco::Scenario& s, const std::vector<int>& a) {
  double pairs = 0.0;
  for (std::size_t n = 0; n < s.users.size(); ++n)
    for (std::size_t m = n + 1; m < s.users.size(); ++m)
      if (a[n] == 1 && a[m] == 1)
        pairs += received(s.users[n]) * received(s.users[m]);
  double locals = 0.0;
  double stand_in = -large_constant(s);
  for (std::size_t n = 0; n < s.users.size(); ++n) {
    if (a[n] == 1) continue;
    double level = oracle::threshold(s, n);
    locals += received(s.users[n]) * (std::isfinite(level) ? level : stand_in);
  }
  return pairs + locals;
}

// Own index-to-bits conversion, most significant bit first, duplicated on
// purpose so profile ordering is cross-checked too.
inline std::vector<int> profile_bits(std::uint64_t index, std::size_t n) {
  std::vector<int> bits(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    bits[k] = static_cast<int>((index >> (n - 1 - k)) & 1u);
  return bits;
}

inline std::vector<std::vector<int>> enumerate_equilibria(const mco::Scenario& s) {
  std::vector<std::vector<int>> found;
  std::size_t n = s.users.size();
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
    std::vector<int> a = profile_bits(idx, n);
    if (is_nash(s, a)) found.push_back(std::move(a));
  }
  return found;
}

struct ScanOptimum {
  std::vector<int> profile;
  double cost = 0.0;
};

inline ScanOptimum optimum(const mco::Scenario& s) {
  std::size_t n = s.users.size();
  ScanOptimum best;
  best.profile = profile_bits(0, n);
  best.cost = system_cost(s, best.profile);
  for (std::uint64_t idx = 1; idx < (std::uint64_t{1} << n); ++idx) {
    std::vector<int> a = profile_bits(idx, n);
    double c = system_cost(s, a);
    if (c < best.cost) {
      best.cost = c;
      best.profile = std::move(a);
    }
  }
  return best;
}

inline std::vector<int> to_bits(const mco::DecisionProfile& p) {
  std::vector<int> out(p.size());
  for (std::size_t n = 0; n < p.size(); ++n) out[n] = p.offloads(n) ? 1 : 0;
  return out;
}

}  // namespace oracle
