// Copyright 2026 The dramcontend Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dramcontend/workloads.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "dramcontend/errors.hpp"

namespace dramcontend {

std::string_view to_string(ActorRole role) {
  switch (role) {
    case ActorRole::Victim: return "victim";
    case ActorRole::NavigateAttacker: return "navigate";
    case ActorRole::BombAttacker: return "bomb";
  }
  return "?";
}

std::string_view to_string(SyncMode mode) { return mode == SyncMode::Lockstep ? "lockstep" : "free"; }

std::string_view to_string(TieBreak tie) {
  switch (tie) {
    case TieBreak::ActorId: return "actor_id";
    case TieBreak::Rotating: return "rotating";
    case TieBreak::Seeded: return "seeded";
  }
  return "?";
}

ActorRole parse_actor_role(std::string_view text) {
  if (text == "victim") return ActorRole::Victim;
  if (text == "navigate") return ActorRole::NavigateAttacker;
  if (text == "bomb") return ActorRole::BombAttacker;
  throw ConfigError("unknown actor role '" + std::string(text) + "'");
}

SyncMode parse_sync_mode(std::string_view text) {
  if (text == "lockstep") return SyncMode::Lockstep;
  if (text == "free" || text == "free_running" || text == "freerunning") return SyncMode::FreeRunning;
  throw ConfigError("sync: expected lockstep or free, got '" + std::string(text) + "'");
}

std::uint64_t navigate_index(std::uint32_t id_cpu, std::uint32_t num_attacker_threads, std::uint64_t iteration) {
  if (id_cpu < 1 || id_cpu > num_attacker_threads) {
    throw ConfigError("navigate_index: id_cpu " + std::to_string(id_cpu) + " outside [1, " +
                      std::to_string(num_attacker_threads) + "]");
  }
  return id_cpu + std::uint64_t{num_attacker_threads} * iteration;
}

std::uint64_t nsamples(std::uint64_t block_slots, std::uint32_t num_attacker_threads) {
  if (block_slots < 2) throw ConfigError("nsamples: block_slots must be at least 2");
  if (num_attacker_threads < 1) throw ConfigError("nsamples: need at least one attacker thread");
  return (block_slots - 1) / num_attacker_threads;
}

std::vector<ActorConfig> build_navigate_actors(std::uint32_t attackers, Bytes benchmark_bytes, MemoryOp op) {
  if (attackers < 1) throw ConfigError("attackers: navigate needs at least one attacker");
  std::vector<ActorConfig> actors;
  actors.push_back({0, ActorRole::Victim, benchmark_bytes, op, 0});
  for (std::uint32_t id = 1; id <= attackers; ++id) {
    actors.push_back({id, ActorRole::NavigateAttacker, benchmark_bytes, op, 0});
  }
  return actors;
}

std::vector<ActorConfig> build_bomb_actors(const DramGeometry& geometry, std::uint32_t attackers,
                                           Bytes benchmark_bytes, MemoryOp op, const ContiguousBlock& block) {
  if (attackers < 1) throw ConfigError("attackers: bomb needs at least one attacker");
  if (benchmark_bytes != geometry.row_slice_bytes()) {
    throw ConfigError("benchmark: bomb attackers access exactly one row slice (" +
                      std::to_string(geometry.row_slice_bytes()) + " bytes)");
  }
  const std::uint32_t available = max_same_bank_offsets(geometry, block.base_offset);
  if (attackers > available) {
    throw CapacityError("attackers exceeds rows available (max " + std::to_string(available) + ")");
  }

  std::vector<ActorConfig> actors;
  actors.push_back({0, ActorRole::Victim, benchmark_bytes, op, 0});
  const auto offsets = same_bank_offsets(geometry, block.base_offset, attackers);
  for (std::uint32_t k = 0; k < attackers; ++k) {
    actors.push_back({k + 1, ActorRole::BombAttacker, benchmark_bytes, op, offsets[k] - block.base_offset});
  }
  return actors;
}

namespace {

void validate_run(const std::vector<ActorConfig>& actors, const IterationPlan& plan,
                  const MemoryController& controller, const RunOptions& options) {
  const DramGeometry& g = controller.geometry();
  options.block.validate(g);
  if (actors.empty()) throw ConfigError("run: no actors");
  if (plan.nsamples < 1) throw ConfigError("run: plan.nsamples must be at least 1");

  const auto victims = std::count_if(actors.begin(), actors.end(),
                                     [](const ActorConfig& a) { return a.role == ActorRole::Victim; });
  if (victims != 1) throw ConfigError("run: exactly one victim required, got " + std::to_string(victims));

  std::set<ActorId> ids;
  std::uint32_t navigators = 0;
  for (const auto& a : actors) {
    if (!ids.insert(a.actor_id).second) throw ConfigError("run: duplicate actor id " + std::to_string(a.actor_id));
    if (a.benchmark_bytes == 0 || a.benchmark_bytes % g.row_slice_bytes() != 0) {
      throw ConfigError("run: actor " + std::to_string(a.actor_id) +
                        " benchmark_bytes is not a positive multiple of row_slice_bytes");
    }
    if (a.role == ActorRole::Victim && (a.actor_id != 0 || a.fixed_offset != 0)) {
      throw ConfigError("run: the victim must be actor 0 at block offset 0");
    }
    if (a.role != ActorRole::NavigateAttacker && a.fixed_offset + a.benchmark_bytes > options.block.size_bytes) {
      throw ConfigError("run: actor " + std::to_string(a.actor_id) + " offset lies outside the block");
    }
    if (a.role == ActorRole::NavigateAttacker) ++navigators;
  }

  const DramAddress victim_addr = decompose(g, options.block.base_offset);

  std::set<std::uint32_t> bomb_rows{victim_addr.row};
  for (const auto& a : actors) {
    if (a.role == ActorRole::NavigateAttacker) {
      if (a.actor_id < 1 || a.actor_id > navigators) {
        throw ConfigError("run: navigate attacker ids must be 1.." + std::to_string(navigators));
      }
      if (plan.block_slots != options.block.size_bytes / a.benchmark_bytes) {
        throw ConfigError("run: plan.block_slots " + std::to_string(plan.block_slots) +
                          " does not match block size / benchmark_bytes");
      }
      const std::uint64_t last = navigate_index(a.actor_id, navigators, plan.nsamples - 1);
      if (last >= plan.block_slots) {
        throw ConfigError("run: navigate attacker " + std::to_string(a.actor_id) + " would reach slot " +
                          std::to_string(last) + " beyond the " + std::to_string(plan.block_slots) +
                          "-slot block");
      }
    } else if (a.role == ActorRole::BombAttacker) {
      const DramAddress addr = decompose(g, options.block.base_offset + a.fixed_offset);
      if (addr.chip != victim_addr.chip || addr.flat_bank != victim_addr.flat_bank) {
        throw ConfigError("run: bomb attacker " + std::to_string(a.actor_id) + " is not in the victim's bank");
      }
      if (!bomb_rows.insert(addr.row).second) {
        throw ConfigError("run: bomb attacker " + std::to_string(a.actor_id) + " reuses row " +
                          std::to_string(addr.row));
      }
    }
  }

  if (!controller.idle()) throw ConfigError("run: controller has pending requests");
  for (const auto& bank : controller.banks()) {
    if (bank != BankState{}) throw ConfigError("run: controller banks are not freshly initialized");
  }
}

class TieOrder {
 public:
  TieOrder(const std::vector<ActorConfig>& actors, const RunOptions& options)
      : mode_(options.tie_break), rng_(options.seed ^ (0x9E3779B97F4A7C15ULL * (options.run_id + 1ULL))) {
    for (const auto& a : actors) ids_.push_back(a.actor_id);
    std::sort(ids_.begin(), ids_.end());
    ranks_.assign(ids_.back() + 1, 0);
  }

  // Ranks for lockstep round `round`, indexed by actor id.
  const std::vector<std::uint32_t>& for_round(std::uint64_t round) {
    std::vector<ActorId> order = ids_;
    if (mode_ == TieBreak::Rotating) {
      std::rotate(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(round % order.size()), order.end());
    } else if (mode_ == TieBreak::Seeded) {
      // Fisher-Yates on raw engine output keeps the order identical across
      // standard library implementations.
      for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng_() % i]);
    }
    for (std::uint32_t pos = 0; pos < order.size(); ++pos) ranks_[order[pos]] = pos;
    return ranks_;
  }

 private:
  TieBreak mode_;
  std::mt19937_64 rng_;
  std::vector<ActorId> ids_;
  std::vector<std::uint32_t> ranks_;
};

struct ActorCursor {
  const ActorConfig* config = nullptr;
  std::uint32_t navigators = 0;
  std::uint64_t iteration = 0;

  std::uint64_t slot() const { return navigate_index(config->actor_id, navigators, iteration); }
  Bytes block_offset() const {
    return config->role == ActorRole::NavigateAttacker ? slot() * config->benchmark_bytes : config->fixed_offset;
  }
};

}  // namespace

std::vector<TraceRecord> run_actors(const std::vector<ActorConfig>& actors, const IterationPlan& plan,
                                    MemoryController& controller, const RunOptions& options) {
  validate_run(actors, plan, controller, options);

  const auto navigators = static_cast<std::uint32_t>(std::count_if(
      actors.begin(), actors.end(), [](const ActorConfig& a) { return a.role == ActorRole::NavigateAttacker; }));

  std::vector<ActorCursor> cursors;
  ActorId max_id = 0;
  for (const auto& a : actors) max_id = std::max(max_id, a.actor_id);
  std::vector<std::size_t> by_id(max_id + 1, 0);
  for (std::size_t i = 0; i < actors.size(); ++i) {
    cursors.push_back({&actors[i], navigators, 0});
    by_id[actors[i].actor_id] = i;
  }

  TieOrder ties(actors, options);
  std::vector<TraceRecord> trace;
  trace.reserve(actors.size() * plan.nsamples);

  auto request_for = [&](const ActorCursor& c, Cycle issue) {
    return MemoryRequest{c.config->actor_id, options.block.base_offset + c.block_offset(), c.config->op,
                         c.config->benchmark_bytes, issue};
  };
  auto record = [&](const MemoryController::Completion& done) {
    ActorCursor& c = cursors[by_id[done.request.actor_id]];
    const bool navigating = c.config->role == ActorRole::NavigateAttacker;
    trace.push_back(TraceRecord{options.run_id, c.config->actor_id, c.config->role, c.iteration,
                                navigating ? c.slot() : c.config->fixed_offset, done.request.issue_cycle,
                                done.outcome.completion_cycle,
                                done.outcome.completion_cycle - done.request.issue_cycle, done.outcome.kind});
    ++c.iteration;
    return done.outcome.completion_cycle;
  };

  if (options.sync == SyncMode::Lockstep) {
    Cycle release = 0;
    for (std::uint64_t round = 0; round < plan.nsamples; ++round) {
      controller.set_tie_ranks(ties.for_round(round));
      for (const auto& c : cursors) controller.submit(request_for(c, release));
      Cycle round_end = release;
      while (!controller.idle()) round_end = std::max(round_end, record(controller.dispatch_next()));
      release = round_end;
    }
  } else {
    controller.set_tie_ranks(ties.for_round(0));
    for (const auto& c : cursors) controller.submit(request_for(c, 0));
    while (!controller.idle()) {
      const auto done = controller.dispatch_next();
      const Cycle finished = record(done);
      const ActorCursor& c = cursors[by_id[done.request.actor_id]];
      if (c.iteration < plan.nsamples) controller.submit(request_for(c, finished));
    }
  }
  return trace;
}

}  // namespace dramcontend
