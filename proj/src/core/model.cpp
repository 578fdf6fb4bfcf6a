// Licensed under the Apache License 2.0 (see LICENSE file).

#include "core/model.hpp"

#include <numbers>

#include "core/errors.hpp"
#include "core/format.hpp"

namespace mco {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgumentError(what);
}

void check_user(const Scenario& s, std::size_t n) {
  if (n >= s.users.size())
    throw OutOfRangeError("user id " + format_u64(n) + " out of range (have " +
                          format_u64(s.users.size()) + " users)");
}

void check_profile(const Scenario& s, const DecisionProfile& a) {
  if (a.size() != s.users.size())
    throw InvalidArgumentError("profile length " + format_u64(a.size()) +
                               " does not match user count " +
                               format_u64(s.users.size()));
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void UserProfile::validate(std::size_t id) const {
  const std::string who = "user " + format_u64(id) + ": ";
  require(positive(transmit_power), who + "transmit_power must be finite and > 0");
  require(positive(channel_gain), who + "channel_gain must be finite and > 0");
  require(positive(background_power), who + "background_power must be finite and > 0");
  require(positive(input_bits), who + "input_bits must be finite and > 0");
  require(positive(cycles), who + "cycles must be finite and > 0");
  require(positive(local_freq), who + "local_freq must be finite and > 0");
  require(positive(cloud_freq), who + "cloud_freq must be finite and > 0");
  require(weight_time >= 0.0 && weight_time <= 1.0, who + "weight_time must be in [0,1]");
  require(weight_energy >= 0.0 && weight_energy <= 1.0, who + "weight_energy must be in [0,1]");
  require(weight_time + weight_energy > 0.0, who + "weight_time + weight_energy must be > 0");
  require(std::isfinite(energy_per_cycle) && energy_per_cycle >= 0.0,
          who + "energy_per_cycle must be finite and >= 0");
}

void Scenario::validate() const {
  require(positive(bandwidth), "bandwidth must be finite and > 0");
  require(!users.empty(), "scenario needs at least one user");
  for (std::size_t n = 0; n < users.size(); ++n) users[n].validate(n);
  if (meta && !meta->positions.empty())
    require(meta->positions.size() == users.size(),
            "meta.positions length does not match user count");
}

DecisionProfile::DecisionProfile(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw InvalidArgumentError("profile bits must be 0 or 1");
}

DecisionProfile DecisionProfile::all_local(std::size_t n) {
  return DecisionProfile(std::vector<std::uint8_t>(n, 0));
}

DecisionProfile DecisionProfile::all_offload(std::size_t n) {
  return DecisionProfile(std::vector<std::uint8_t>(n, 1));
}

DecisionProfile DecisionProfile::from_index(std::uint64_t index, std::size_t n) {
  if (n > 63) throw InvalidArgumentError("from_index supports at most 63 users");
  std::vector<std::uint8_t> bits(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    bits[k] = static_cast<std::uint8_t>((index >> (n - 1 - k)) & 1u);
  return DecisionProfile(std::move(bits));
}

DecisionProfile DecisionProfile::from_string(const std::string& text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw InvalidArgumentError("profile string must contain only '0' and '1'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return DecisionProfile(std::move(bits));
}

std::size_t DecisionProfile::offloader_count() const {
  std::size_t k = 0;
  for (auto b : bits_) k += b;
  return k;
}

std::uint64_t DecisionProfile::to_index() const {
  std::uint64_t index = 0;
  for (auto b : bits_) index = (index << 1) | b;
  return index;
}

std::string DecisionProfile::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t k = 0; k < bits_.size(); ++k) s[k] = bits_[k] ? '1' : '0';
  return s;
}

double interference_at(const Scenario& s, const DecisionProfile& a, std::size_t n) {
  check_user(s, n);
  check_profile(s, a);
  double sum = 0.0;
  for (std::size_t m = 0; m < s.users.size(); ++m)
    if (m != n && a.offloads(m)) sum += s.users[m].received_power();
  return sum;
}

double uplink_rate(const Scenario& s, const DecisionProfile& a, std::size_t n) {
  const double mu = interference_at(s, a, n);
  const UserProfile& u = s.users[n];
  const double sinr = u.received_power() / (u.background_power + mu);
  return s.bandwidth * std::log2(1.0 + sinr);
}

double local_time(const UserProfile& u) { return u.cycles / u.local_freq; }

double local_energy(const UserProfile& u) { return u.energy_per_cycle * u.cycles; }

double local_overhead(const UserProfile& u) {
  return u.weight_time * local_time(u) + u.weight_energy * local_energy(u);
}

double offload_time(const Scenario& s, const DecisionProfile& a, std::size_t n) {
  return s.users[n].input_bits / uplink_rate(s, a, n);
}

double offload_energy(const Scenario& s, const DecisionProfile& a, std::size_t n) {
  return s.users[n].transmit_power * s.users[n].input_bits / uplink_rate(s, a, n);
}

double cloud_exec_time(const UserProfile& u) { return u.cycles / u.cloud_freq; }

double cloud_overhead(const Scenario& s, const DecisionProfile& a, std::size_t n) {
  check_user(s, n);
  const UserProfile& u = s.users[n];
  return u.weight_time * (offload_time(s, a, n) + cloud_exec_time(u)) +
         u.weight_energy * offload_energy(s, a, n);
}

double user_overhead(const Scenario& s, const DecisionProfile& a, std::size_t n) {
  check_user(s, n);
  check_profile(s, a);
  return a.offloads(n) ? cloud_overhead(s, a, n) : local_overhead(s.users[n]);
}

double system_cost(const Scenario& s, const DecisionProfile& a) {
  check_profile(s, a);
  double sum = 0.0;
  for (std::size_t n = 0; n < s.users.size(); ++n) sum += user_overhead(s, a, n);
  return sum;
}

Threshold threshold(const Scenario& s, std::size_t n) {
  check_user(s, n);
  const UserProfile& u = s.users[n];
  // Local overhead minus the weighted cloud execution time: the budget the
  // upload leg must beat. Nonpositive budget means no uplink rate, however
  // high, makes offloading worthwhile.
  const double budget = local_overhead(u) - u.weight_time * cloud_exec_time(u);
  if (budget <= 0.0) return Threshold::never_offload();
  const double exponent =
      (u.weight_time + u.weight_energy * u.transmit_power) * u.input_bits /
      (s.bandwidth * budget);
  // 2^x - 1 via expm1 keeps precision for small exponents; overflow to +inf
  // for huge exponents degrades gracefully to -background_power.
  const double growth = std::expm1(exponent * std::numbers::ln2);
  return Threshold(u.received_power() / growth - u.background_power);
}

ScenarioTerms::ScenarioTerms(const Scenario& s) : scenario(&s) {
  const std::size_t n_users = s.users.size();
  received_power.reserve(n_users);
  threshold_w.reserve(n_users);
  local_cost.reserve(n_users);
  rate_weight.reserve(n_users);
  exec_cost.reserve(n_users);
  noise.reserve(n_users);
  for (std::size_t n = 0; n < n_users; ++n) {
    const UserProfile& u = s.users[n];
    received_power.push_back(u.received_power());
    threshold_w.push_back(threshold(s, n).watts());
    local_cost.push_back(local_overhead(u));
    rate_weight.push_back((u.weight_time + u.weight_energy * u.transmit_power) * u.input_bits);
    exec_cost.push_back(u.weight_time * cloud_exec_time(u));
    noise.push_back(u.background_power);
  }
}

}  // namespace mco
