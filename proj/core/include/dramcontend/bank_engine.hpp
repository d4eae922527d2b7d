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
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dramcontend/address_map.hpp"
#include "dramcontend/geometry.hpp"

namespace dramcontend {

using Cycle = std::uint64_t;
using ActorId = std::uint32_t;

enum class AccessKind { RowHit, RowOpenFromIdle, RowConflict };
enum class MemoryOp { Read, Write };
enum class ArbitrationPolicy { Fcfs, FrFcfs };

std::string_view to_string(AccessKind kind);
std::string_view to_string(MemoryOp op);
std::string_view to_string(ArbitrationPolicy policy);
AccessKind parse_access_kind(std::string_view text);
MemoryOp parse_memory_op(std::string_view text);
ArbitrationPolicy parse_policy(std::string_view text);

// Cycle costs of the row-buffer commands. Defaults are the 19-19-19
// (CL-tRCD-tRP) speed grade of DDR4-2666.
struct TimingParams {
  Cycle cas_cycles = 19;
  Cycle rcd_cycles = 19;
  Cycle rp_cycles = 19;
  Cycle refresh_interval_cycles = 0;  // 0 disables refresh
  Cycle refresh_duration_cycles = 350;
  Cycle bus_transfer_cycles = 4;

  void validate() const;
  bool refresh_enabled() const { return refresh_interval_cycles > 0; }

  // Per-slice cost of an access of the given kind.
  Cycle latency(AccessKind kind) const {
    switch (kind) {
      case AccessKind::RowHit: return cas_cycles + bus_transfer_cycles;
      case AccessKind::RowOpenFromIdle: return rcd_cycles + cas_cycles + bus_transfer_cycles;
      case AccessKind::RowConflict: return rp_cycles + rcd_cycles + cas_cycles + bus_transfer_cycles;
    }
    return 0;
  }

  bool operator==(const TimingParams&) const = default;
};

struct BankState {
  std::optional<std::uint32_t> open_row;  // empty = Idle (precharged)
  Cycle busy_until = 0;
  Cycle last_refresh = 0;  // most recent refresh already applied to this bank

  bool operator==(const BankState&) const = default;
};

struct SliceStep {
  AccessKind kind;
  Cycle start;
  Cycle completion;
  BankState next;
};

// One row-slice access to one bank. Service starts at max(now, busy_until).
// Throws ModelError when row is outside the geometry.
SliceStep access_slice(const BankState& bank, std::uint32_t row, Cycle now, const TimingParams& params,
                       const DramGeometry& geometry);

// Applies every refresh due at or before `start` that the bank has not seen
// yet and returns the (possibly deferred) start cycle.
Cycle apply_due_refresh(BankState& bank, Cycle start, const TimingParams& params);

// Forces all banks to Idle and blocks them until now + refresh_duration.
// No-op when refresh is disabled.
void refresh_tick(std::span<BankState> banks, Cycle now, const TimingParams& params);

struct MemoryRequest {
  ActorId actor_id = 0;
  Bytes offset = 0;  // module byte offset of the first byte
  MemoryOp op = MemoryOp::Write;
  Bytes size_bytes = 1024;
  Cycle issue_cycle = 0;
};

struct AccessOutcome {
  AccessKind kind = AccessKind::RowHit;  // kind of the first slice
  Cycle latency_cycles = 0;              // last completion - first start
  std::uint32_t slices = 0;
  Cycle start_cycle = 0;
  Cycle completion_cycle = 0;
};

// Splits the request into row slices, decomposes each and applies them in
// offset order; each slice starts once the previous one has completed.
// `banks` is indexed by global_bank(). Range errors from decompose propagate.
AccessOutcome service_request(const MemoryRequest& request, const DramGeometry& geometry,
                              const TimingParams& params, std::span<BankState> banks, Cycle now);

// Per-request trace record emitted by the controller.
struct AccessTrace {
  Cycle cycle = 0;  // service start
  ActorId actor_id = 0;
  Bytes offset = 0;
  std::uint32_t chip = 0;
  std::uint32_t flat_bank = 0;
  std::uint32_t row = 0;
  AccessKind kind = AccessKind::RowHit;
  Cycle latency_cycles = 0;
};

// Predicate telling FR-FCFS whether a request would start with a row hit.
using RowHitProbe = std::function<bool(const MemoryRequest&)>;

// Picks the request to service next among `pending`.
//
// FCFS: oldest issue_cycle; ties go to the lowest tie rank, which is the
// actor id unless `tie_ranks` (indexed by actor id) says otherwise.
// FR-FCFS: among requests issued at or before `now`, row hits first, then
// FCFS. Returns an index into `pending`, which must be non-empty.
std::size_t arbitrate(std::span<const MemoryRequest> pending, Cycle now, ArbitrationPolicy policy,
                      const RowHitProbe& is_row_hit = {}, std::span<const std::uint32_t> tie_ranks = {});

// Single-threaded memory controller: holds pending requests, arbitrates
// between them and reserves bank time for the winner. One request's slices
// are never interleaved with another request's.
class MemoryController {
 public:
  MemoryController(DramGeometry geometry, TimingParams params, ArbitrationPolicy policy = ArbitrationPolicy::Fcfs);

  struct Completion {
    MemoryRequest request;
    AccessOutcome outcome;
  };

  void submit(const MemoryRequest& request);
  bool idle() const { return pending_.empty(); }
  std::size_t pending() const { return pending_.size(); }

  // Services exactly one pending request. Requires !idle().
  Completion dispatch_next();

  // Overrides the actor-id tie-break for same-cycle requests; index = actor id.
  void set_tie_ranks(std::vector<std::uint32_t> ranks) { tie_ranks_ = std::move(ranks); }
  void set_trace_hook(std::function<void(const AccessTrace&)> hook) { trace_hook_ = std::move(hook); }

  const DramGeometry& geometry() const { return geometry_; }
  const TimingParams& timing() const { return params_; }
  ArbitrationPolicy policy() const { return policy_; }
  std::span<const BankState> banks() const { return banks_; }

 private:
  bool starts_with_hit(const MemoryRequest& request) const;
  Cycle first_slice_ready(const MemoryRequest& request) const;

  DramGeometry geometry_;
  TimingParams params_;
  ArbitrationPolicy policy_;
  std::vector<BankState> banks_;
  std::vector<MemoryRequest> pending_;
  std::vector<std::uint32_t> tie_ranks_;
  std::function<void(const AccessTrace&)> trace_hook_;
};

}  // namespace dramcontend
