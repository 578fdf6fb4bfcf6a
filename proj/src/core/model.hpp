// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace mco {

// Per-user physical, task and preference parameters. All SI: watts, hertz,
// bits, CPU cycles, joules. The two noise contributions at the base station
// only ever appear as a sum, so they are stored as one field.
struct UserProfile {
  double transmit_power = 0.0;    // watts, > 0
  double channel_gain = 0.0;      // dimensionless, > 0
  double background_power = 0.0;  // watts, > 0
  double input_bits = 0.0;        // task input size, > 0
  double cycles = 0.0;            // CPU cycles to execute the task, > 0
  double local_freq = 0.0;        // device CPU, cycles/s, > 0
  double cloud_freq = 0.0;        // cloud clone CPU, cycles/s, > 0
  double weight_time = 0.0;       // in [0,1]
  double weight_energy = 0.0;     // in [0,1], weight_time + weight_energy > 0
  double energy_per_cycle = 0.0;  // joules/cycle, >= 0

  // Received signal power at the base station.
  double received_power() const { return transmit_power * channel_gain; }

  void validate(std::size_t id) const;
};

// Provenance of a generated scenario: placement geometry and the seed that
// produced it. Purely descriptive; no operation reads it.
struct ScenarioMeta {
  std::uint64_t seed = 0;
  double region_side = 0.0;        // meters
  double path_loss_exponent = 0.0;
  double min_distance = 0.0;       // meters, distance floor to the station
  std::array<double, 2> base_station{0.0, 0.0};
  std::vector<std::array<double, 2>> positions;  // one per user, same order
};

// A shared wireless cell: bandwidth plus the ordered user list. The index in
// `users` is the user id and is stable across every operation.
struct Scenario {
  double bandwidth = 0.0;  // hertz, > 0
  std::vector<UserProfile> users;
  std::optional<ScenarioMeta> meta;

  std::size_t size() const { return users.size(); }
  void validate() const;
};

// Joint strategy vector; bit n is user n's decision, 1 = offload to the
// cloud, 0 = compute locally. Ordering is lexicographic with user 0 most
// significant, so "011" < "100".
class DecisionProfile {
public:
  DecisionProfile() = default;
  explicit DecisionProfile(std::vector<std::uint8_t> bits);

  static DecisionProfile all_local(std::size_t n);
  static DecisionProfile all_offload(std::size_t n);
  // Bit k of `index` (counting from the most significant of n bits) becomes
  // user k's decision; iterating index 0..2^n-1 yields lexicographic order.
  static DecisionProfile from_index(std::uint64_t index, std::size_t n);
  static DecisionProfile from_string(const std::string& text);

  std::size_t size() const { return bits_.size(); }
  bool offloads(std::size_t n) const { return bits_[n] != 0; }
  void set(std::size_t n, bool offload) { bits_[n] = offload ? 1 : 0; }
  void flip(std::size_t n) { bits_[n] ^= 1; }
  std::size_t offloader_count() const;
  std::uint64_t to_index() const;
  std::string to_string() const;
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend auto operator<=>(const DecisionProfile&, const DecisionProfile&) = default;

private:
  std::vector<std::uint8_t> bits_;
};

// Interference level below which offloading is a (weakly) best response for
// a user. Users whose task can never benefit from the cloud at any rate get
// the sentinel value, negative infinity, which compares below every finite
// interference.
class Threshold {
public:
  Threshold() : watts_(-std::numeric_limits<double>::infinity()) {}
  explicit Threshold(double watts) : watts_(watts) {}
  static Threshold never_offload() { return Threshold(); }

  double watts() const { return watts_; }
  bool never() const { return std::isinf(watts_) && watts_ < 0; }

  friend auto operator<=>(const Threshold&, const Threshold&) = default;

private:
  double watts_;
};

// Total received power of all offloading users other than n.
double interference_at(const Scenario& s, const DecisionProfile& a, std::size_t n);

// Shannon uplink rate of user n against the interference the profile
// creates. Defined regardless of a_n; only the other users' decisions enter.
double uplink_rate(const Scenario& s, const DecisionProfile& a, std::size_t n);

double local_time(const UserProfile& u);    // seconds
double local_energy(const UserProfile& u);  // joules

// Weighted time/energy cost of computing on the device. The unit is a
// preference-weighted mix of seconds and joules, deliberately heterogeneous;
// all costs below share it.
double local_overhead(const UserProfile& u);

double offload_time(const Scenario& s, const DecisionProfile& a, std::size_t n);
double offload_energy(const Scenario& s, const DecisionProfile& a, std::size_t n);
double cloud_exec_time(const UserProfile& u);

// Weighted cost of offloading under the profile's interference: upload time
// plus cloud execution time, weighted, plus weighted upload energy.
double cloud_overhead(const Scenario& s, const DecisionProfile& a, std::size_t n);

// Cost user n actually pays under the profile: the local branch when
// a_n = 0 (independent of everyone's decisions), the cloud branch otherwise.
double user_overhead(const Scenario& s, const DecisionProfile& a, std::size_t n);

// Sum of user_overhead over all users.
double system_cost(const Scenario& s, const DecisionProfile& a);

// The indifference interference level for user n: offloading is (weakly)
// better than local execution iff the interference user n sees does not
// exceed it. Finite values may be negative (then offloading never pays,
// since interference is nonnegative). When even an infinite uplink rate
// cannot beat local execution the sentinel is returned.
Threshold threshold(const Scenario& s, std::size_t n);

// Precomputed per-user terms for hot loops over many profiles. cloud_cost
// uses the algebraically combined form of cloud_overhead; the two agree to
// rounding, and every reported cost is still recomputed via system_cost.
struct ScenarioTerms {
  explicit ScenarioTerms(const Scenario& s);

  const Scenario* scenario;
  std::vector<double> received_power;  // per user
  std::vector<double> threshold_w;     // -inf when the user can never benefit
  std::vector<double> local_cost;
  std::vector<double> rate_weight;     // (w_T + w_E * P) * B
  std::vector<double> exec_cost;       // w_T * cycles / cloud_freq
  std::vector<double> noise;           // background power

  std::size_t size() const { return received_power.size(); }

  double cloud_cost(std::size_t n, double interference_w) const {
    double sinr = received_power[n] / (noise[n] + interference_w);
    double rate = scenario->bandwidth * std::log2(1.0 + sinr);
    return rate_weight[n] / rate + exec_cost[n];
  }

  // Interference seen by n, direct sum in user order (the canonical route
  // everywhere, so decisions never depend on summation order).
  double interference(const DecisionProfile& a, std::size_t n) const {
    double sum = 0.0;
    for (std::size_t m = 0; m < received_power.size(); ++m)
      if (m != n && a.offloads(m)) sum += received_power[m];
    return sum;
  }
};

}  // namespace mco
