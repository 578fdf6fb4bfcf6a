// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

// Hand-built scenarios with frozen reference values. The doubles below were
// computed once with 60-digit arithmetic (mpmath) from the closed formulas
// and rounded to nearest; tests compare against them at 1e-12 relative,
// which leaves three orders of magnitude of slack over double rounding
// while still pinning every formula to full precision.

#include <cstdint>

#include "core/model.hpp"

namespace fixtures {

inline mco::UserProfile reference_user(double channel_gain, double local_freq,
                                       double energy_per_cycle) {
  mco::UserProfile u;
  u.transmit_power = 0.1;
  u.channel_gain = channel_gain;
  u.background_power = 1e-13;
  u.input_bits = 3.36e6;
  u.cycles = 1e9;
  u.local_freq = local_freq;
  u.cloud_freq = 1e11;
  u.weight_time = 0.5;
  u.weight_energy = 0.5;
  u.energy_per_cycle = energy_per_cycle;
  return u;
}

// One user, H = 1e-4, device CPU 1 GHz.
inline mco::Scenario instance_a() {
  mco::Scenario s;
  s.bandwidth = 5e6;
  s.users = {reference_user(1e-4, 1e9, 1e-11)};
  return s;
}

// Three users at descending channel gains with distinct device CPUs; the
// per-cycle energies follow the quadratic clock rule.
inline mco::Scenario instance_b() {
  mco::Scenario s;
  s.bandwidth = 5e6;
  s.users = {reference_user(1e-4, 1e9, 1e-11),
             reference_user(2e-5, 8e8, 6.4e-12),
             reference_user(5e-6, 5e8, 2.5e-12)};
  return s;
}

// Device faster than the cloud clone: offloading can never pay and the
// threshold must be the sentinel.
inline mco::UserProfile never_offload_user() {
  mco::UserProfile u = reference_user(1e-4, 1e9, 1e-11);
  u.cloud_freq = 5e8;
  return u;
}

namespace a {
inline constexpr double rate_solo = 132877123.86762925;
inline constexpr double offload_time_solo = 0.025286519622047176;
inline constexpr double offload_energy_solo = 0.0025286519622047176;
inline constexpr double cloud_cost_solo = 0.018907585792125947;
inline constexpr double local_cost = 0.505;
inline constexpr double threshold_w = 1.4942100304234091e-5;
inline constexpr double poa_bound = 26.708856728303566;
// Input size at which the threshold collapses to (numerically) zero.
inline constexpr double boundary_bits = 120797385.33420841;
}  // namespace a

namespace b {
inline constexpr double mu0_111 = 2.5000000000000002e-6;
inline constexpr double mu1_111 = 1.0500000000000001e-5;
inline constexpr double mu2_111 = 1.2000000000000001e-5;
inline constexpr double rate0_111 = 11609640.243605611;
inline constexpr double rate1_111 = 1257693.8239878600;
inline constexpr double rate2_111 = 294468.44286335086;
inline constexpr double cloud0_111 = 0.16417805902881844;
inline constexpr double cloud1_111 = 1.4743560266841527;
inline constexpr double cloud2_111 = 6.2807149188226292;
inline constexpr double local0 = 0.505;
inline constexpr double local1 = 0.6282;
inline constexpr double local2 = 1.00125;
inline constexpr double threshold0 = 1.4942100304234091e-5;
inline constexpr double threshold1 = 3.9335139776978192e-6;
inline constexpr double threshold2 = 1.7050817261064328e-6;
inline constexpr double system_cost_111 = 7.9192490045356004;
inline constexpr double potential_111 = 2.6000000000000003e-11;
inline constexpr double potential_101 = 1.2867027955395640e-11;
inline constexpr double rate0_110 = 12924812.203044323;
inline constexpr double cloud0_110 = 0.14798080087884916;
inline constexpr double all_local = 2.13445;
inline constexpr double all_cloud = 7.9192490045356004;
inline constexpr double poa_bound = 35.131942668294918;
}  // namespace b

}  // namespace fixtures
