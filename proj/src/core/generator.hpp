// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstdint>
#include <vector>

#include "core/model.hpp"

namespace mco {

// Random-cell recipe: users scattered uniformly over a square region with
// the base station at the center, channel gain d^-alpha, task parameters
// shared, device CPU drawn from a small set. Defaults are the reference
// setup: 5 MHz bandwidth, 100 mW transmit power, -100 dBm noise, 420 KB
// input (KB = 1000 bytes), 10^9 cycles, 100 GHz cloud clone.
struct GeneratorSpec {
  std::size_t users = 0;  // required, >= 1
  std::uint64_t seed = 0;

  double region_side = 50.0;      // meters
  double min_distance = 1.0;      // meters; distance floor to the station
  double path_loss_exponent = 4.0;
  double bandwidth = 5e6;         // hertz
  double transmit_power = 0.1;    // watts
  double background_power = 1e-13;  // watts
  double input_bits = 3.36e6;
  double cycles = 1e9;
  std::vector<double> local_freq_choices = {5e8, 8e8, 1e9};  // cycles/s
  double cloud_freq = 1e11;       // cycles/s
  double weight_time = 0.5;
  double weight_energy = 0.5;
  // Joules/cycle; negative selects the default rule
  // 1e-11 * (local_freq / 1 GHz)^2, which scales quadratically with clock.
  double energy_per_cycle = -1.0;

  void validate() const;
};

// Deterministic under (spec, seed): per user, in id order, draws x, y, then
// the device CPU choice. Distance to the station is clamped below by
// min_distance so the d^-alpha gain stays bounded. Geometry and seed are
// recorded in the scenario meta block.
Scenario generate_scenario(const GeneratorSpec& g);

}  // namespace mco
