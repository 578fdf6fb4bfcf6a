// Licensed under the Apache License 2.0 (see LICENSE file).

#include "core/game.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/format.hpp"
#include "core/rng.hpp"

namespace mco {

Decision best_response(const Scenario& s, const DecisionProfile& a, std::size_t n) {
  const double mu = interference_at(s, a, n);
  return best_response_for(mu, threshold(s, n).watts());
}

BestResponseSet improvement_set(const Scenario& s, const DecisionProfile& a, std::size_t n) {
  const double mu = interference_at(s, a, n);
  return improving_move(a.offloads(n), mu, threshold(s, n).watts());
}

bool is_nash(const ScenarioTerms& t, const DecisionProfile& a) {
  for (std::size_t n = 0; n < t.size(); ++n) {
    if (improving_move(a.offloads(n), t.interference(a, n), t.threshold_w[n]))
      return false;
  }
  return true;
}

bool is_nash(const Scenario& s, const DecisionProfile& a) {
  if (a.size() != s.users.size())
    throw InvalidArgumentError("profile length does not match user count");
  return is_nash(ScenarioTerms(s), a);
}

double large_constant(const ScenarioTerms& t) {
  double scale = 0.0;
  for (std::size_t n = 0; n < t.size(); ++n) {
    if (std::isfinite(t.threshold_w[n]))
      scale = std::max(scale, std::abs(t.received_power[n] * t.threshold_w[n]));
    scale = std::max(scale, t.received_power[n] * t.received_power[n]);
  }
  return 1000.0 * scale;
}

double potential(const ScenarioTerms& t, const DecisionProfile& a) {
  const double stand_in = -large_constant(t);
  double pair_sum = 0.0;
  double local_sum = 0.0;
  for (std::size_t n = 0; n < t.size(); ++n) {
    if (a.offloads(n)) {
      for (std::size_t m = 0; m < t.size(); ++m)
        if (m != n && a.offloads(m))
          pair_sum += t.received_power[n] * t.received_power[m];
    } else {
      const double level =
          std::isfinite(t.threshold_w[n]) ? t.threshold_w[n] : stand_in;
      local_sum += t.received_power[n] * level;
    }
  }
  return 0.5 * pair_sum + local_sum;
}

double potential(const Scenario& s, const DecisionProfile& a) {
  if (a.size() != s.users.size())
    throw InvalidArgumentError("profile length does not match user count");
  return potential(ScenarioTerms(s), a);
}

std::vector<DecisionProfile> enumerate_equilibria(const Scenario& s, std::size_t cap) {
  const std::size_t n_users = s.users.size();
  if (n_users > cap)
    throw CapacityError("equilibrium enumeration over " + format_u64(n_users) +
                        " users exceeds the cap of " + format_u64(cap) +
                        " (2^N profiles)");
  const ScenarioTerms terms(s);
  std::vector<DecisionProfile> found;
  const std::uint64_t count = std::uint64_t{1} << n_users;
  for (std::uint64_t index = 0; index < count; ++index) {
    DecisionProfile a = DecisionProfile::from_index(index, n_users);
    if (is_nash(terms, a)) found.push_back(std::move(a));
  }
  return found;
}

namespace {

// One improving user per the rule, or nothing when the profile is stable.
std::optional<std::size_t> pick_mover(const ScenarioTerms& t, const DecisionProfile& a,
                                      UpdateRule rule, std::size_t cursor, Rng& rng) {
  const std::size_t n_users = t.size();
  auto improves = [&](std::size_t n) {
    return improving_move(a.offloads(n), t.interference(a, n), t.threshold_w[n]).has_value();
  };
  switch (rule) {
    case UpdateRule::RoundRobin:
      for (std::size_t k = 0; k < n_users; ++k) {
        const std::size_t n = (cursor + k) % n_users;
        if (improves(n)) return n;
      }
      return std::nullopt;
    case UpdateRule::LowestIndex:
      for (std::size_t n = 0; n < n_users; ++n)
        if (improves(n)) return n;
      return std::nullopt;
    case UpdateRule::RandomSeeded: {
      std::vector<std::size_t> movers;
      for (std::size_t n = 0; n < n_users; ++n)
        if (improves(n)) movers.push_back(n);
      if (movers.empty()) return std::nullopt;
      return movers[static_cast<std::size_t>(rng.below(movers.size()))];
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<DecisionProfile> better_response_path(const Scenario& s,
                                                  const DecisionProfile& a0,
                                                  UpdateRule rule, std::uint64_t seed) {
  if (a0.size() != s.users.size())
    throw InvalidArgumentError("profile length does not match user count");
  const ScenarioTerms terms(s);
  Rng rng(seed);
  DecisionProfile a = a0;
  std::vector<DecisionProfile> path;
  std::size_t cursor = 0;
  // Termination is guaranteed by the potential; the bound only guards
  // against an inconsistent improvement relation, which would be a bug.
  const std::size_t step_bound = (std::size_t{1} << 22);
  for (std::size_t step = 0; step < step_bound; ++step) {
    auto mover = pick_mover(terms, a, rule, cursor, rng);
    if (!mover) return path;
    a.flip(*mover);
    cursor = (*mover + 1) % s.users.size();
    path.push_back(a);
  }
  throw Error("better response path exceeded its step bound");
}

}  // namespace mco
