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

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dramcontend/address_map.hpp"
#include "dramcontend/bank_engine.hpp"
#include "dramcontend/geometry.hpp"

namespace dramcontend {

enum class ActorRole { Victim, NavigateAttacker, BombAttacker };

// How actors pace their iterations.
//  Lockstep: iteration k of every actor is released when all actors have
//    finished iteration k-1, so the victim's k-th sample always overlaps the
//    attackers' k-th access.
//  FreeRunning: each actor issues its next request as soon as its previous
//    one completes.
enum class SyncMode { Lockstep, FreeRunning };

// Tie-break for requests issued in the same cycle.
//  ActorId: lowest actor id first.
//  Rotating: the first pick rotates by one actor per lockstep round
//    (ActorId order in free-running runs).
//  Seeded: a fresh pseudo-random order per round drawn from the run seed.
enum class TieBreak { ActorId, Rotating, Seeded };

std::string_view to_string(ActorRole role);
std::string_view to_string(SyncMode mode);
std::string_view to_string(TieBreak tie);
ActorRole parse_actor_role(std::string_view text);
SyncMode parse_sync_mode(std::string_view text);

struct ActorConfig {
  ActorId actor_id = 0;  // 0 is the victim; attackers use 1..N like pinned core ids
  ActorRole role = ActorRole::Victim;
  Bytes benchmark_bytes = 1024;
  MemoryOp op = MemoryOp::Write;
  Bytes fixed_offset = 0;  // block-relative; used by Victim and BombAttacker
};

struct IterationPlan {
  std::uint64_t nsamples = 0;     // iterations per actor
  std::uint64_t block_slots = 0;  // workload_bytes / benchmark_bytes
};

struct TraceRecord {
  std::uint32_t run_id = 0;
  ActorId actor_id = 0;
  ActorRole role = ActorRole::Victim;
  std::uint64_t iteration = 0;
  std::uint64_t slot_or_offset = 0;  // slot index for navigate attackers, block offset otherwise
  Cycle issue_cycle = 0;
  Cycle completion_cycle = 0;
  Cycle cycles = 0;  // completion - issue
  AccessKind outcome_kind = AccessKind::RowHit;
};

// Slot visited by navigate attacker `id_cpu` (1-based) on `iteration`.
// Throws ConfigError when id_cpu is outside [1, num_attacker_threads].
std::uint64_t navigate_index(std::uint32_t id_cpu, std::uint32_t num_attacker_threads, std::uint64_t iteration);

// Iterations each navigate attacker can run without touching the victim's
// slot 0: floor((block_slots - 1) / num_attacker_threads).
std::uint64_t nsamples(std::uint64_t block_slots, std::uint32_t num_attacker_threads);

// Victim (id 0, offset 0) plus `attackers` navigate attackers with ids 1..N.
std::vector<ActorConfig> build_navigate_actors(std::uint32_t attackers, Bytes benchmark_bytes,
                                               MemoryOp op = MemoryOp::Write);

// Victim at block offset 0 plus attackers pinned to the victim's bank, one
// row each (see same_bank_offsets). benchmark_bytes must equal the row slice.
// Throws CapacityError when the victim's chip chunk cannot hold them.
std::vector<ActorConfig> build_bomb_actors(const DramGeometry& geometry, std::uint32_t attackers,
                                           Bytes benchmark_bytes, MemoryOp op = MemoryOp::Write,
                                           const ContiguousBlock& block = {});

struct RunOptions {
  std::uint32_t run_id = 0;
  SyncMode sync = SyncMode::Lockstep;
  TieBreak tie_break = TieBreak::Rotating;
  std::uint64_t seed = 0;
  ContiguousBlock block{};
};

// Runs every actor for plan.nsamples iterations on a freshly constructed
// controller. All actors release their first request at cycle 0. Returns one
// record per (actor, iteration) in dispatch order. Throws ConfigError on
// a plan/actor mismatch.
std::vector<TraceRecord> run_actors(const std::vector<ActorConfig>& actors, const IterationPlan& plan,
                                    MemoryController& controller, const RunOptions& options = {});

}  // namespace dramcontend
