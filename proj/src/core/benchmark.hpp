// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstddef>
#include <vector>

#include "core/model.hpp"

namespace mco {

struct Optimum {
  DecisionProfile profile;  // lexicographically smallest among cost ties
  double cost = 0.0;
};

// Plain scan over all 2^N profiles; every candidate is costed through
// system_cost so results compare exactly against the branch-and-bound
// route. Guarded by a hard cap well past any sensible exhaustive size.
Optimum optimum_exhaustive(const Scenario& s);

// Depth-first search over partial assignments in user order, local branch
// first (preserving lexicographic discovery order). Subtrees are pruned on
// an admissible per-user bound: a committed local user contributes its exact
// cost, any user that may offload contributes its cloud cost at the
// interference accumulated so far, which only grows as more users commit to
// offloading. Leaves are costed through system_cost, so the result matches
// the exhaustive scan bit for bit.
Optimum optimum_branch_and_bound(const Scenario& s);

// Exhaustive up to the cap, branch-and-bound beyond it.
Optimum centralized_optimum(const Scenario& s, std::size_t exhaustive_cap = 20);

struct Baselines {
  double all_local = 0.0;
  double all_cloud = 0.0;
};

Baselines baselines(const Scenario& s);

// Worst equilibrium cost over the optimum cost; needs the full equilibrium
// enumeration, so the same capacity cap applies.
double poa(const Scenario& s, std::size_t cap = 20);

// Closed-form upper bound on poa: sum of local costs over the sum of
// min(local cost, cloud cost at an interference-free uplink). The
// interference-free cloud cost is the best any offloader can ever do, which
// is what makes the ratio an upper bound.
double poa_bound(const Scenario& s);

struct EquilibriumReport {
  DecisionProfile optimum_profile;
  double optimum_cost = 0.0;
  std::size_t equilibrium_count = 0;
  DecisionProfile best_equilibrium;
  double best_equilibrium_cost = 0.0;
  DecisionProfile worst_equilibrium;
  double worst_equilibrium_cost = 0.0;
  double price_of_anarchy = 0.0;
  double price_of_anarchy_bound = 0.0;
  double all_local_cost = 0.0;
  double all_cloud_cost = 0.0;
};

// Single pass bundling enumeration, optimum, ratios and baselines.
EquilibriumReport equilibrium_report(const Scenario& s, std::size_t cap = 20);

}  // namespace mco
