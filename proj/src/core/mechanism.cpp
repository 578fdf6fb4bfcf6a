// Licensed under the Apache License 2.0 (see LICENSE file).

#include "core/mechanism.hpp"

#include "core/errors.hpp"
#include "core/format.hpp"
#include "core/game.hpp"

namespace mco {

void MechanismConfig::validate() const {
  if (quiet_slots < 1) throw InvalidArgumentError("quiet_slots must be >= 1");
  if (max_slots < 1) throw InvalidArgumentError("max_slots must be >= 1");
}

std::size_t contention_winner(const std::vector<std::size_t>& contenders,
                              ContentionMode mode, Rng& rng) {
  if (contenders.empty()) throw InvalidArgumentError("empty contender set");
  switch (mode) {
    case ContentionMode::UniformBackoff: {
      std::size_t winner = contenders[0];
      double best = rng.uniform01();
      for (std::size_t i = 1; i < contenders.size(); ++i) {
        const double tau = rng.uniform01();
        if (tau < best) {
          best = tau;
          winner = contenders[i];
        }
      }
      return winner;
    }
    case ContentionMode::SeededRandomWinner:
      return contenders[static_cast<std::size_t>(rng.below(contenders.size()))];
  }
  throw InvalidArgumentError("unknown contention mode");
}

MechanismTrace run_mechanism(const Scenario& s, const MechanismConfig& cfg) {
  s.validate();
  cfg.validate();
  const std::size_t n_users = s.users.size();
  const ScenarioTerms terms(s);
  Rng rng(cfg.seed);

  MechanismTrace trace;
  DecisionProfile a = DecisionProfile::all_offload(n_users);
  trace.initial_profile = a;
  trace.initial_potential = potential(terms, a);
  trace.initial_cost = system_cost(s, a);

  std::int64_t quiet = 0;
  for (std::int64_t slot = 0; slot < cfg.max_slots && quiet < cfg.quiet_slots; ++slot) {
    SlotRecord rec;
    rec.slot = slot;
    rec.pilot_messages = static_cast<std::int64_t>(a.offloader_count());

    rec.interference.resize(n_users);
    for (std::size_t n = 0; n < n_users; ++n)
      rec.interference[n] = terms.interference(a, n);

    for (std::size_t n = 0; n < n_users; ++n)
      if (improving_move(a.offloads(n), rec.interference[n], terms.threshold_w[n]))
        rec.contenders.push_back(n);

    if (!rec.contenders.empty()) {
      const std::size_t winner = contention_winner(rec.contenders, cfg.contention, rng);
      a.flip(winner);
      rec.winner = winner;
      rec.enquiry_messages = 1;
      rec.reply_messages = 1;
      rec.rtu_messages = 1;
      ++trace.update_count;
      quiet = 0;
    } else {
      ++quiet;
    }

    rec.profile = a;
    rec.overhead.resize(n_users);
    for (std::size_t n = 0; n < n_users; ++n)
      rec.overhead[n] = user_overhead(s, a, n);
    rec.potential = potential(terms, a);
    rec.system_cost = system_cost(s, a);

    trace.pilot_messages += rec.pilot_messages;
    trace.enquiry_messages += rec.enquiry_messages;
    trace.reply_messages += rec.reply_messages;
    trace.rtu_messages += rec.rtu_messages;
    trace.slots.push_back(std::move(rec));
  }

  trace.final_profile = a;
  trace.converged = quiet >= cfg.quiet_slots;
  return trace;
}

MessageLedger message_ledger(const MechanismTrace& t) {
  MessageLedger ledger;
  ledger.updates = t.update_count;
  ledger.enquiries = t.enquiry_messages;
  ledger.replies = t.reply_messages;
  ledger.update_broadcasts = t.rtu_messages;
  ledger.total = ledger.enquiries + ledger.replies + ledger.update_broadcasts;
  return ledger;
}

std::string trace_lines(const MechanismTrace& t) {
  std::string out;
  for (const SlotRecord& rec : t.slots) {
    out += format_i64(rec.slot);
    out += ',';
    if (rec.winner) out += format_u64(*rec.winner);
    out += ',';
    out += rec.profile.to_string();
    out += ',';
    out += format_double(rec.potential);
    out += ',';
    out += format_double(rec.system_cost);
    out += ',';
    out += format_i64(rec.enquiry_messages + rec.reply_messages + rec.rtu_messages);
    out += '\n';
  }
  return out;
}

}  // namespace mco
