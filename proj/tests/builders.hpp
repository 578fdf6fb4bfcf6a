// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

// Scenario constructors used by property tests: inverse-engineered
// homogeneous instances with prescribed threshold-over-K ratios, and
// randomized homogeneous instances. The inversion is log-based, the reverse
// direction of the pow-based formula under test.

#include <cmath>
#include <vector>

#include "core/model.hpp"
#include "core/rng.hpp"

namespace builders {

inline mco::Scenario ratio_scenario(const std::vector<double>& ratios) {
  const double bandwidth = 5e6, power = 0.1, gain = 1e-4, noise = 1e-13;
  const double bits = 3.36e6, local_f = 1e9, cloud_f = 1e11;
  const double w_t = 0.5, w_e = 0.5, nu = 1e-11;
  const double k = power * gain;

  mco::Scenario s;
  s.bandwidth = bandwidth;
  for (double r : ratios) {
    double level = r * k;
    double per_bit = (w_t + w_e * power) * bits / bandwidth;
    double budget = per_bit / std::log2(1.0 + k / (level + noise));
    double cycles = budget / (w_t / local_f + w_e * nu - w_t / cloud_f);
    mco::UserProfile u;
    u.transmit_power = power;
    u.channel_gain = gain;
    u.background_power = noise;
    u.input_bits = bits;
    u.cycles = cycles;
    u.local_freq = local_f;
    u.cloud_freq = cloud_f;
    u.weight_time = w_t;
    u.weight_energy = w_e;
    u.energy_per_cycle = nu;
    s.users.push_back(u);
  }
  s.validate();
  return s;
}

// Equal received power for everyone, everything else randomized: task sizes,
// demands, device CPUs, time/energy weights. Thresholds stay finite because
// the local time term always dominates the cloud execution term.
inline mco::Scenario random_homogeneous(std::size_t users, mco::Rng& rng) {
  const double gain = std::exp(rng.uniform(std::log(1e-6), std::log(1e-3)));
  mco::Scenario s;
  s.bandwidth = 5e6;
  for (std::size_t n = 0; n < users; ++n) {
    mco::UserProfile u;
    u.transmit_power = 0.1;
    u.channel_gain = gain;
    u.background_power = 1e-13;
    u.input_bits = std::exp(rng.uniform(std::log(1e5), std::log(2e7)));
    u.cycles = std::exp(rng.uniform(std::log(2e7), std::log(5e9)));
    u.local_freq = n % 3 == 0 ? 5e8 : (n % 3 == 1 ? 8e8 : 1e9);
    u.cloud_freq = 1e11;
    u.weight_time = rng.uniform(0.1, 0.9);
    u.weight_energy = 1.0 - u.weight_time;
    u.energy_per_cycle = 1e-11 * (u.local_freq / 1e9) * (u.local_freq / 1e9);
    s.users.push_back(u);
  }
  s.validate();
  return s;
}

}  // namespace builders
