// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstddef>
#include <vector>

#include "core/model.hpp"

namespace mco {

// Sorted view of a scenario in which every user is received at the same
// power K. Under that symmetry the interference a user sees depends only on
// how many others offload, which makes an equilibrium constructible in
// O(N log N) instead of by search.
struct HomogeneousView {
  struct Entry {
    std::size_t user;  // original id
    double ratio;      // threshold / K; -inf for never-offload users
  };

  double common_power = 0.0;   // K, watts
  std::vector<Entry> order;    // sorted by ratio descending, ties by id
};

// Builds the view; throws NotHomogeneousError when received powers differ by
// more than 1e-9 relative. K is taken from user 0.
HomogeneousView homogeneous_view(const Scenario& s);

// Largest prefix of the sorted order that can offload together so that each
// member still benefits: the k-th member joins only if k <= ratio + 1.
// Requires the top ratio to be nonnegative (otherwise everyone prefers local
// execution and the caller should use the all-local profile); throws
// InvalidArgumentError in that case. Returns original user ids, never empty.
std::vector<std::size_t> beneficial_group(const HomogeneousView& v);

// Equilibrium by construction: all-local when even the top ratio is
// negative, otherwise offload exactly the beneficial group. The result
// always passes is_nash.
DecisionProfile homogeneous_equilibrium(const Scenario& s);

}  // namespace mco
