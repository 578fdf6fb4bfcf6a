// Licensed under the Apache License 2.0 (see LICENSE file).

#include "core/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/errors.hpp"
#include "core/format.hpp"
#include "core/game.hpp"

namespace mco {

namespace {

constexpr std::size_t kExhaustiveHardCap = 24;

struct Incumbent {
  DecisionProfile profile;
  double cost = std::numeric_limits<double>::infinity();

  void offer(const DecisionProfile& a, double c) {
    if (c < cost || (c == cost && a < profile)) {
      profile = a;
      cost = c;
    }
  }
};

class BranchAndBound {
public:
  explicit BranchAndBound(const Scenario& s) : s_(s), terms_(s) {}

  Optimum solve() {
    const std::size_t n = s_.users.size();
    // Seed with both uniform profiles; any incumbent only tightens pruning
    // and the tie-aware offer keeps the lexicographic contract intact.
    DecisionProfile all_local = DecisionProfile::all_local(n);
    best_.offer(all_local, system_cost(s_, all_local));
    DecisionProfile all_cloud = DecisionProfile::all_offload(n);
    best_.offer(all_cloud, system_cost(s_, all_cloud));
    DecisionProfile a = DecisionProfile::all_local(n);
    descend(a, 0, 0.0);
    return {best_.profile, best_.cost};
  }

private:
  void descend(DecisionProfile& a, std::size_t depth, double committed_power) {
    const std::size_t n = s_.users.size();
    if (depth == n) {
      best_.offer(a, system_cost(s_, a));
      return;
    }
    // Relative slack keeps rounding differences between the bound's
    // algebraic route and the canonical leaf costs from pruning an optimum;
    // equal-bound nodes are explored, preserving the lexicographic winner.
    if (lower_bound(a, depth, committed_power) > best_.cost * (1.0 + 1e-12)) return;
    a.set(depth, false);
    descend(a, depth + 1, committed_power);
    a.set(depth, true);
    descend(a, depth + 1, committed_power + terms_.received_power[depth]);
    a.set(depth, false);
  }

  // Admissible: interference can only grow as further users commit to
  // offloading, and cloud cost grows with interference.
  double lower_bound(const DecisionProfile& a, std::size_t depth,
                     double committed_power) const {
    double bound = 0.0;
    for (std::size_t m = 0; m < depth; ++m) {
      if (a.offloads(m))
        bound += terms_.cloud_cost(m, committed_power - terms_.received_power[m]);
      else
        bound += terms_.local_cost[m];
    }
    for (std::size_t m = depth; m < s_.users.size(); ++m)
      bound += std::min(terms_.local_cost[m], terms_.cloud_cost(m, committed_power));
    return bound;
  }

  const Scenario& s_;
  ScenarioTerms terms_;
  Incumbent best_;
};

double safe_ratio(double worst, double opt) {
  if (opt > 0.0) return worst / opt;
  return worst == opt ? 1.0 : std::numeric_limits<double>::infinity();
}

}  // namespace

Optimum optimum_exhaustive(const Scenario& s) {
  s.validate();
  const std::size_t n = s.users.size();
  if (n > kExhaustiveHardCap)
    throw CapacityError("exhaustive profile scan over " + format_u64(n) +
                        " users exceeds the hard cap of " +
                        format_u64(kExhaustiveHardCap));
  Incumbent best;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t index = 0; index < count; ++index) {
    DecisionProfile a = DecisionProfile::from_index(index, n);
    best.offer(a, system_cost(s, a));
  }
  return {best.profile, best.cost};
}

Optimum optimum_branch_and_bound(const Scenario& s) {
  s.validate();
  return BranchAndBound(s).solve();
}

Optimum centralized_optimum(const Scenario& s, std::size_t exhaustive_cap) {
  if (s.users.size() <= std::min(exhaustive_cap, kExhaustiveHardCap))
    return optimum_exhaustive(s);
  return optimum_branch_and_bound(s);
}

Baselines baselines(const Scenario& s) {
  s.validate();
  const std::size_t n = s.users.size();
  return {system_cost(s, DecisionProfile::all_local(n)),
          system_cost(s, DecisionProfile::all_offload(n))};
}

double poa(const Scenario& s, std::size_t cap) {
  const auto equilibria = enumerate_equilibria(s, cap);
  if (equilibria.empty()) throw Error("no equilibrium found; decision logic is inconsistent");
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& a : equilibria) worst = std::max(worst, system_cost(s, a));
  return safe_ratio(worst, centralized_optimum(s, cap).cost);
}

double poa_bound(const Scenario& s) {
  s.validate();
  const std::size_t n_users = s.users.size();
  double num = 0.0;
  double den = 0.0;
  for (std::size_t n = 0; n < n_users; ++n) {
    const double local = local_overhead(s.users[n]);
    DecisionProfile solo = DecisionProfile::all_local(n_users);
    solo.set(n, true);
    const double cloud_best = cloud_overhead(s, solo, n);
    num += local;
    den += std::min(local, cloud_best);
  }
  if (den == 0.0) return 1.0;  // all local costs zero; ratio degenerates
  return num / den;
}

EquilibriumReport equilibrium_report(const Scenario& s, std::size_t cap) {
  EquilibriumReport report;
  const auto equilibria = enumerate_equilibria(s, cap);
  if (equilibria.empty()) throw Error("no equilibrium found; decision logic is inconsistent");
  report.equilibrium_count = equilibria.size();
  report.best_equilibrium = equilibria.front();
  report.best_equilibrium_cost = system_cost(s, equilibria.front());
  report.worst_equilibrium = equilibria.front();
  report.worst_equilibrium_cost = report.best_equilibrium_cost;
  for (const auto& a : equilibria) {
    const double c = system_cost(s, a);
    if (c < report.best_equilibrium_cost) {
      report.best_equilibrium_cost = c;
      report.best_equilibrium = a;
    }
    if (c > report.worst_equilibrium_cost) {
      report.worst_equilibrium_cost = c;
      report.worst_equilibrium = a;
    }
  }
  const Optimum opt = centralized_optimum(s, cap);
  report.optimum_profile = opt.profile;
  report.optimum_cost = opt.cost;
  report.price_of_anarchy = safe_ratio(report.worst_equilibrium_cost, report.optimum_cost);
  report.price_of_anarchy_bound = poa_bound(s);
  const Baselines base = baselines(s);
  report.all_local_cost = base.all_local;
  report.all_cloud_cost = base.all_cloud;
  return report;
}

}  // namespace mco
