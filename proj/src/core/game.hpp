// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/model.hpp"

namespace mco {

enum class Decision : std::uint8_t { Local = 0, Offload = 1 };

// Strictly improving unilateral moves for one user. Binary strategies and
// strict improvement leave room for at most one element; empty means the
// current decision is already (weakly) optimal against the others.
using BestResponseSet = std::optional<Decision>;

// Decision logic on a measured interference level. Offloading wins ties, so
// the comparison is weak; the never-offload sentinel (-inf) loses against
// every nonnegative interference.
inline Decision best_response_for(double interference_w, double threshold_w) {
  return interference_w <= threshold_w ? Decision::Offload : Decision::Local;
}

// Strict-improvement variant used by update dynamics: a move is offered only
// if it strictly lowers the user's overhead, so exact ties yield nothing.
inline BestResponseSet improving_move(bool offloading, double interference_w,
                                      double threshold_w) {
  if (!offloading && interference_w < threshold_w) return Decision::Offload;
  if (offloading && interference_w > threshold_w) return Decision::Local;
  return std::nullopt;
}

Decision best_response(const Scenario& s, const DecisionProfile& a, std::size_t n);
BestResponseSet improvement_set(const Scenario& s, const DecisionProfile& a, std::size_t n);

// True iff no user has a strictly improving unilateral move.
bool is_nash(const Scenario& s, const DecisionProfile& a);
bool is_nash(const ScenarioTerms& t, const DecisionProfile& a);

// Exact potential of the game: half the sum of pairwise received-power
// products over offloading pairs, plus received_power * threshold for every
// local user. Every strictly improving unilateral move lowers it, which is
// what guarantees update dynamics terminate. Users with the never-offload
// sentinel get the finite stand-in -large_constant for their threshold term;
// they only ever leave the cloud, and any value below every reachable
// interference preserves the decrease property while keeping the potential
// finite.
double potential(const Scenario& s, const DecisionProfile& a);
double potential(const ScenarioTerms& t, const DecisionProfile& a);

// Stand-in scale: 1000 x the larger of max|received_power*threshold| over
// users with finite thresholds and max received_power^2. Strictly positive.
double large_constant(const ScenarioTerms& t);

// All Nash equilibria, lexicographically ordered by profile bits. Walks the
// full 2^N profile space; refuses above the cap.
std::vector<DecisionProfile> enumerate_equilibria(const Scenario& s, std::size_t cap = 20);

enum class UpdateRule {
  RoundRobin,    // cyclic scan from the last mover
  RandomSeeded,  // uniform among users with an improving move
  LowestIndex,   // first user with an improving move
};

// Applies one improving move per step until none remains; returns the
// profile after each step (empty when a0 is already an equilibrium). The
// endpoint is a Nash equilibrium; the potential strictly decreases stepwise.
std::vector<DecisionProfile> better_response_path(const Scenario& s,
                                                  const DecisionProfile& a0,
                                                  UpdateRule rule,
                                                  std::uint64_t seed = 0);

}  // namespace mco
