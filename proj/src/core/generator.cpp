// Licensed under the Apache License 2.0 (see LICENSE file).

#include "core/generator.hpp"

#include <cmath>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace mco {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgumentError(what);
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void GeneratorSpec::validate() const {
  require(users >= 1, "users must be >= 1");
  require(positive(region_side), "region_side must be finite and > 0");
  require(positive(min_distance), "min_distance must be finite and > 0");
  require(positive(path_loss_exponent), "path_loss_exponent must be finite and > 0");
  require(positive(bandwidth), "bandwidth must be finite and > 0");
  require(positive(transmit_power), "transmit_power must be finite and > 0");
  require(positive(background_power), "background_power must be finite and > 0");
  require(positive(input_bits), "input_bits must be finite and > 0");
  require(positive(cycles), "cycles must be finite and > 0");
  require(!local_freq_choices.empty(), "local_freq_choices must not be empty");
  for (double f : local_freq_choices)
    require(positive(f), "local_freq_choices entries must be finite and > 0");
  require(positive(cloud_freq), "cloud_freq must be finite and > 0");
  require(weight_time >= 0.0 && weight_time <= 1.0, "weight_time must be in [0,1]");
  require(weight_energy >= 0.0 && weight_energy <= 1.0, "weight_energy must be in [0,1]");
  require(weight_time + weight_energy > 0.0, "weight_time + weight_energy must be > 0");
  require(std::isfinite(energy_per_cycle), "energy_per_cycle must be finite");
}

Scenario generate_scenario(const GeneratorSpec& g) {
  g.validate();
  Rng rng(g.seed);

  Scenario s;
  s.bandwidth = g.bandwidth;
  s.users.reserve(g.users);

  ScenarioMeta meta;
  meta.seed = g.seed;
  meta.region_side = g.region_side;
  meta.path_loss_exponent = g.path_loss_exponent;
  meta.min_distance = g.min_distance;
  meta.base_station = {g.region_side / 2.0, g.region_side / 2.0};
  meta.positions.reserve(g.users);

  for (std::size_t n = 0; n < g.users; ++n) {
    const double x = rng.uniform(0.0, g.region_side);
    const double y = rng.uniform(0.0, g.region_side);
    const double dx = x - meta.base_station[0];
    const double dy = y - meta.base_station[1];
    const double d = std::max(std::hypot(dx, dy), g.min_distance);

    UserProfile u;
    u.transmit_power = g.transmit_power;
    u.channel_gain = std::pow(d, -g.path_loss_exponent);
    u.background_power = g.background_power;
    u.input_bits = g.input_bits;
    u.cycles = g.cycles;
    u.local_freq = rng.pick(g.local_freq_choices);
    u.cloud_freq = g.cloud_freq;
    u.weight_time = g.weight_time;
    u.weight_energy = g.weight_energy;
    u.energy_per_cycle = g.energy_per_cycle >= 0.0
                             ? g.energy_per_cycle
                             : 1e-11 * (u.local_freq / 1e9) * (u.local_freq / 1e9);

    meta.positions.push_back({x, y});
    s.users.push_back(u);
  }

  s.meta = std::move(meta);
  s.validate();
  return s;
}

}  // namespace mco
