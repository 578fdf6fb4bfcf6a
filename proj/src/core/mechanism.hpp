// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/model.hpp"
#include "core/rng.hpp"

namespace mco {

enum class ContentionMode {
  UniformBackoff,      // every contender draws a backoff, smallest wins
  SeededRandomWinner,  // winner drawn uniformly from the contender set
};

struct MechanismConfig {
  std::int64_t quiet_slots = 1;  // consecutive slots without an update that end the run
  ContentionMode contention = ContentionMode::UniformBackoff;
  std::uint64_t seed = 0;
  std::int64_t max_slots = 100000;  // safety cap, never the intended exit

  void validate() const;
};

// Everything observable in one decision slot. Interference and contenders
// are measured against the profile at slot start; profile, overheads,
// potential and cost describe the state after the slot's update (if any).
struct SlotRecord {
  std::int64_t slot = 0;
  std::vector<double> interference;      // watts, per user
  std::vector<std::size_t> contenders;   // users with a strictly improving move
  std::optional<std::size_t> winner;     // member of contenders when present
  DecisionProfile profile;
  std::vector<double> overhead;          // per user, at `profile`
  double potential = 0.0;
  double system_cost = 0.0;
  // Message counts for this slot. Pilot transmissions (one per offloader,
  // reused for measurement) are recorded but never enter the ledger; the
  // enquiry/reply/update-broadcast triple exists only when a winner updates.
  std::int64_t pilot_messages = 0;
  std::int64_t enquiry_messages = 0;
  std::int64_t reply_messages = 0;
  std::int64_t rtu_messages = 0;
};

struct MechanismTrace {
  std::vector<SlotRecord> slots;
  DecisionProfile initial_profile;  // all-offload
  double initial_potential = 0.0;
  double initial_cost = 0.0;
  DecisionProfile final_profile;
  std::int64_t update_count = 0;
  std::int64_t pilot_messages = 0;
  std::int64_t enquiry_messages = 0;
  std::int64_t reply_messages = 0;
  std::int64_t rtu_messages = 0;
  bool converged = false;  // quiet-slot exit; false only if max_slots was hit
};

// Accounting convention: each decision update costs one interference
// enquiry, one reply and one update broadcast; nothing else is counted.
struct MessageLedger {
  std::int64_t updates = 0;
  std::int64_t enquiries = 0;
  std::int64_t replies = 0;
  std::int64_t update_broadcasts = 0;
  std::int64_t total = 0;  // always 3 * updates
};

// Runs the slotted update protocol from the all-offload profile: every slot
// each user measures its interference and computes its improving move;
// users holding one contend, one winner flips its decision and broadcasts
// the change; the run ends after quiet_slots consecutive slots without a
// broadcast. At most one decision changes per slot, so the potential
// strictly decreases at every update slot and the endpoint of a converged
// run is a Nash equilibrium.
MechanismTrace run_mechanism(const Scenario& s, const MechanismConfig& cfg);

MessageLedger message_ledger(const MechanismTrace& t);

// Winner among contenders. UniformBackoff draws one uniform per contender
// (in contender order) and takes the smallest, ties to the lowest id;
// SeededRandomWinner draws the winner's position directly. Identical
// distributions; both kept because traces differ in RNG consumption.
std::size_t contention_winner(const std::vector<std::size_t>& contenders,
                              ContentionMode mode, Rng& rng);

// Line-delimited export, one slot per line:
//   t,winner,profile-bitstring,potential,system-cost,messages
// winner is empty on quiet slots; messages counts only ledger messages.
std::string trace_lines(const MechanismTrace& t);

}  // namespace mco
