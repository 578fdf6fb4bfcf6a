// Licensed under the Apache License 2.0 (see LICENSE file).

#include "core/homogeneous.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/format.hpp"

namespace mco {

namespace {
constexpr double kRelTolerance = 1e-9;
}

HomogeneousView homogeneous_view(const Scenario& s) {
  s.validate();
  const double k = s.users[0].received_power();
  for (std::size_t n = 1; n < s.users.size(); ++n) {
    const double p = s.users[n].received_power();
    if (std::abs(p - k) > kRelTolerance * std::max(std::abs(p), std::abs(k)))
      throw NotHomogeneousError("received power of user " + format_u64(n) +
                                " (" + format_double(p) +
                                " W) deviates from user 0 (" + format_double(k) +
                                " W) beyond 1e-9 relative");
  }
  HomogeneousView v;
  v.common_power = k;
  v.order.reserve(s.users.size());
  for (std::size_t n = 0; n < s.users.size(); ++n)
    v.order.push_back({n, threshold(s, n).watts() / k});
  std::stable_sort(v.order.begin(), v.order.end(),
                   [](const auto& a, const auto& b) { return a.ratio > b.ratio; });
  return v;
}

std::vector<std::size_t> beneficial_group(const HomogeneousView& v) {
  if (v.order.empty()) throw InvalidArgumentError("empty view");
  if (!(v.order[0].ratio >= 0.0))
    throw InvalidArgumentError(
        "top threshold/K ratio is negative; no user benefits from the cloud "
        "and the all-local profile is the equilibrium");
  std::vector<std::size_t> group{v.order[0].user};
  // Growth step: admitting the t-th sorted user keeps everyone in the group
  // satisfied iff t <= ratio_t + 1; ratios are sorted, so earlier members
  // stay satisfied automatically. At most N steps.
  for (std::size_t t = 2; t <= v.order.size(); ++t) {
    if (static_cast<double>(t) > v.order[t - 1].ratio + 1.0) break;
    group.push_back(v.order[t - 1].user);
  }
  return group;
}

DecisionProfile homogeneous_equilibrium(const Scenario& s) {
  const HomogeneousView v = homogeneous_view(s);
  DecisionProfile a = DecisionProfile::all_local(s.users.size());
  if (!(v.order[0].ratio >= 0.0)) return a;
  for (std::size_t user : beneficial_group(v)) a.set(user, true);
  return a;
}

}  // namespace mco
